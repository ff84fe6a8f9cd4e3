#!/usr/bin/env python3
"""Run the report CLI; equivalent to the installed `algcomplete` command.

Example:
    python3 scripts/run_report.py --mode classify --out report.json
"""

import sys

from algcomplete.cli import run_report

if __name__ == "__main__":
    sys.exit(run_report())
