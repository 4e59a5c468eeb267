#!/usr/bin/env python3
"""Run the full theorem suite over all connected graphs up to a given order
and write JSON + CSV reports.

Example:
    python scripts/run_small_graph_sweep.py --n-max 6 --out-dir results/
"""

import argparse
import pathlib
import time

from topoline.harness import EnumerationSpec, run_verification
from topoline.io_formats import emit_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=2)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--theorems", default="all",
                        help="comma-separated subset of T1..T11, or 'all'")
    parser.add_argument("--out-dir", default="results")
    args = parser.parse_args()

    theorems = None if args.theorems == "all" else tuple(args.theorems.split(","))
    spec = EnumerationSpec(args.n_min, args.n_max, connected_only=True)

    start = time.time()
    report = run_verification(spec, theorems)
    elapsed = time.time() - start

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"sweep_n{args.n_min}-{args.n_max}"
    (out_dir / f"{stem}.json").write_bytes(emit_report(report, "json"))
    (out_dir / f"{stem}.csv").write_bytes(emit_report(report, "csv"))

    agg = report.aggregates()
    print(f"graphs:         {agg['graphs_checked']}")
    print(f"checks:         {agg['checks_run']}")
    print(f"violations:     {agg['violations']}")
    print(f"equality cases: {agg['equality_cases']}")
    print(f"not applicable: {agg['not_applicable']}")
    print(f"elapsed:        {elapsed:.1f}s")
    print(f"reports:        {out_dir / stem}.{{json,csv}}")
    for key, tid in agg["violation_refs"]:
        print(f"VIOLATION {tid} on {key}")
    return 1 if agg["violations"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
