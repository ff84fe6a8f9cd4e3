"""Batch driver: classify, audit, oracle-crosscheck, paper-examples.

Every flag has an environment-variable mirror with the ALGC_ prefix
(ALGC_CATALOG, ALGC_MODE, ALGC_BOUND, ALGC_UNIVERSE, ALGC_BUDGET, ALGC_OUT,
ALGC_JOBS); explicit flags win over the environment.  Reports are JSON with
sorted keys and contain no timestamps, so a fixed configuration produces
byte-identical output regardless of --jobs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .errors import AlgebraError, ConfigInvalid
from .groups import FiniteGroup, direct_product, is_isomorphic
from .catalog import alternating, build_catalog, cyclic, resolve_catalog, symmetric
from .completeness import (
    classify_completeness,
    char_simple_audit,
    implication_audit,
    oracle_completeness,
)
from .rings import ring_classify, ring_zn, subring, zero_ring
from .lie import lie_classify, sl2

SCHEMA = "algcomplete-report/1"


def _env(name: str, default=None):
    return os.environ.get(f"ALGC_{name}", default)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="algcomplete",
        description="Classify finite groups, rings and Lie algebras by completeness notions.",
    )
    p.add_argument("--catalog", default=_env("CATALOG", "builtin"),
                   help="catalog JSON path, or 'builtin' for all groups of order <= 24")
    p.add_argument("--mode", default=_env("MODE", "classify"),
                   choices=["classify", "audit", "oracle-crosscheck", "paper-examples"])
    p.add_argument("--bound", type=int, default=int(_env("BOUND", 0)) or None,
                   help="cokernel/universe bound; default 2*|G| per group")
    p.add_argument("--universe", default=_env("UNIVERSE", None),
                   help="universe JSON path for the oracles; default: the catalog itself")
    p.add_argument("--budget", type=int, default=int(_env("BUDGET", 0)) or None,
                   help="search node budget per backtracking run")
    p.add_argument("--out", default=_env("OUT", None), help="report file; default stdout")
    p.add_argument("--jobs", type=int, default=int(_env("JOBS", 1)))
    return p


def _load_catalog(path: str) -> list[FiniteGroup]:
    if path == "builtin":
        return list(build_catalog(24))
    try:
        with open(path) as fh:
            entries = json.load(fh)
    except OSError as exc:
        raise ConfigInvalid(f"cannot read catalog: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigInvalid(f"catalog is not valid JSON: {exc}") from exc
    if not isinstance(entries, list):
        raise ConfigInvalid("catalog file must hold a JSON list of entries")
    return resolve_catalog(entries)


def _verdict_dict(v) -> dict:
    return {
        "mode": v.mode,
        "holds": v.flag,
        "bound": v.bound,
        "universe": v.universe_id,
        "witness": v.witness,
    }


def _report_dict(rep) -> dict:
    return {
        "name": rep.name,
        "order": rep.order,
        "center_order": rep.center_order,
        "aut_order": rep.aut_order,
        "inn_order": rep.inn_order,
        "out_order": rep.out_order,
        "proto_complete": rep.proto_complete,
        "proto_section": list(rep.proto_section) if rep.proto_section else None,
        "strong_complete": rep.strong_complete,
    }


# worker functions must be module level for process pools


def _job_classify(args) -> dict:
    G, _, budget = args
    rep = classify_completeness(G, budget=budget)
    return _report_dict(rep)


def _job_crosscheck(args) -> dict:
    G, (bound, universe), budget = args
    b = bound if bound is not None else 2 * G.order
    rep = classify_completeness(G, budget=budget)
    op = oracle_completeness(G, "proto", b, universe, "universe", budget)
    os_ = oracle_completeness(G, "strong", b, universe, "universe", budget)
    return {
        "name": rep.name,
        "bound": b,
        "proto": {"theorem": rep.proto_complete, "oracle": op.flag},
        "strong": {"theorem": rep.strong_complete, "oracle": os_.flag},
        "agree": op.flag == rep.proto_complete and os_.flag == rep.strong_complete,
    }


def _job_audit(args) -> dict:
    G, (bound, universe), budget = args
    b = bound if bound is not None else 2 * G.order
    aud = implication_audit(G, b, universe, "universe", budget)
    return {
        "name": aud.report.name,
        "classification": _report_dict(aud.report),
        "oracle_proto": _verdict_dict(aud.oracle_proto),
        "oracle_strong": _verdict_dict(aud.oracle_strong),
        "oracle_complete": _verdict_dict(aud.oracle_complete),
        "normal_subgroups_all_characteristic": aud.normal_all_characteristic,
        "violations": list(aud.violations),
    }


_JOBS = {"classify": _job_classify, "oracle-crosscheck": _job_crosscheck, "audit": _job_audit}


def _run_groups(mode: str, catalog, extra, budget, jobs: int) -> list[dict]:
    work = [(G, extra, budget) for G in catalog]
    fn = _JOBS[mode]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, work))
    return [fn(w) for w in work]


def _paper_examples(budget) -> list[dict]:
    """The named group, ring and Lie results, each as an expected/actual pair."""
    checks = []

    def check(name: str, expected, actual):
        checks.append({"check": name, "expected": expected, "actual": actual,
                       "pass": expected == actual})

    Z2, Z4, S3 = cyclic(2), cyclic(4), symmetric(3)
    r2 = classify_completeness(Z2, budget=budget)
    check("Z2 proto-complete", True, r2.proto_complete)
    v = oracle_completeness(Z2, "complete", 2, [Z4], "Z4-only", budget)
    check("Z2 not complete (witness in Z4)", False, v.flag)
    check("Z2 witness is the doubling embedding", [0, 2],
          v.witness["image"] if v.witness else None)
    r3 = classify_completeness(S3, budget=budget)
    check("S3 strong-complete", True, r3.strong_complete)
    Z2xS3, _, _ = direct_product(Z2, S3, name="Z2xS3")
    check("Z2xS3 not proto-complete", False,
          classify_completeness(Z2xS3, budget=budget).proto_complete)
    check("Z4 not proto-complete", False,
          classify_completeness(Z4, budget=budget).proto_complete)
    A5 = alternating(5)
    audit = char_simple_audit(A5, budget=budget)
    check("Aut(A5) order", 120, audit.aut_order)
    check("Aut(A5) strong-complete", True, audit.aut_strong_complete)
    check("Z/4 ring complete", True, ring_classify(ring_zn(4)).complete)
    check("zero ring on Z2 not complete", False, ring_classify(zero_ring(2)).complete)
    check("2Z/8Z not complete", False,
          ring_classify(subring(ring_zn(8), [0, 2, 4, 6])).complete)
    sl = lie_classify(sl2(5))
    check("sl2(F5) strong-complete", True, sl.strong_complete)
    check("sl2(F5) derivation dimension", 3, sl.der_dim)
    return checks


def run_report(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        catalog = _load_catalog(args.catalog)
        universe = _load_catalog(args.universe) if args.universe else catalog
    except ConfigInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {
        "schema": SCHEMA,
        "mode": args.mode,
        "catalog_size": len(catalog),
        "bound": args.bound,
    }
    failed = False
    try:
        if args.mode == "paper-examples":
            checks = _paper_examples(args.budget)
            report["checks"] = checks
            failed = any(not c["pass"] for c in checks)
        elif args.mode == "classify":
            report["objects"] = _run_groups("classify", catalog, None, args.budget, args.jobs)
        elif args.mode == "oracle-crosscheck":
            rows = _run_groups("oracle-crosscheck", catalog, (args.bound, universe),
                               args.budget, args.jobs)
            report["objects"] = rows
            failed = any(not r["agree"] for r in rows)
        else:
            rows = _run_groups("audit", catalog, (args.bound, universe),
                               args.budget, args.jobs)
            report["objects"] = rows
            failed = any(r["violations"] for r in rows)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report["failed"] = failed
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if failed else 0


def main() -> None:
    sys.exit(run_report())


if __name__ == "__main__":
    main()
