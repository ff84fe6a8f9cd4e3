#!/usr/bin/env python3
"""Sweep the builtin catalog with the full implication audit and print a summary.

For every group of order at most 24 this runs the theorem-level classifier and
all three definition-level oracles (proto, strong, bounded-complete), then
prints one line per group and any implication violations at the end.

Example:
    python3 scripts/audit_catalog.py --bound-factor 2
"""

import argparse
import sys
import time

from algcomplete.catalog import build_catalog
from algcomplete.completeness import implication_audit


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=24)
    parser.add_argument("--bound-factor", type=int, default=2,
                        help="cokernel bound as a multiple of each group order")
    args = parser.parse_args()

    catalog = build_catalog(args.max_order)
    start = time.monotonic()
    bad = []
    for G in catalog:
        aud = implication_audit(G, args.bound_factor * G.order, catalog, "builtin")
        r = aud.report
        flags = "".join(
            ch if ok else "-"
            for ch, ok in (
                ("p", r.proto_complete),
                ("c", aud.oracle_complete.flag),
                ("s", r.strong_complete),
            )
        )
        print(f"{r.name:>12}  |G|={r.order:<3} Z={r.center_order:<3} "
              f"Out={r.out_order:<4} [{flags}]")
        if aud.violations:
            bad.append((r.name, aud.violations))
    print(f"\n{len(catalog)} groups audited in {time.monotonic() - start:.1f}s")
    if bad:
        for name, violations in bad:
            print(f"VIOLATION {name}: {violations}")
        return 1
    print("no implication violations")
    return 0


if __name__ == "__main__":
    sys.exit(main())
