#!/usr/bin/env python3
"""Survey the hyperbolicity constant over all connected non-tree graphs up to
a given order: distribution of delta, tightness of the m/4 bound, and the
slack of the GA1(L(G)) lower bound.

Example:
    python scripts/hyperbolicity_survey.py --n-max 6
"""

import argparse
import time
from collections import Counter
from fractions import Fraction

from topoline.graph_core import is_forest
from topoline.harness import EnumerationSpec, enumerate_graphs
from topoline.hyperbolicity import hyperbolicity_constant, hyperbolicity_upper_bound
from topoline.io_formats import emit_graph6
from topoline.theorems import check_T5_ga_hyperbolicity


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6,
                        help="largest order to survey (exact computation caps at 8)")
    args = parser.parse_args()

    start = time.time()
    distribution: Counter[Fraction] = Counter()
    tight = []
    worst_slack = None
    count = 0
    for g in enumerate_graphs(EnumerationSpec(3, args.n_max, connected_only=True)):
        if is_forest(g):
            continue
        count += 1
        delta = hyperbolicity_constant(g).delta
        distribution[delta] += 1
        if delta == hyperbolicity_upper_bound(g):
            tight.append(emit_graph6(g))
        check = check_T5_ga_hyperbolicity(g)
        if check.applicable:
            slack = float(check.slack)
            if worst_slack is None or slack < worst_slack[0]:
                worst_slack = (slack, emit_graph6(g), delta)

    print(f"connected non-tree graphs, 3 <= n <= {args.n_max}: {count}")
    for delta in sorted(distribution):
        print(f"  delta = {delta}: {distribution[delta]} graphs")
    print(f"m/4 bound tight on: {', '.join(tight) if tight else 'none'}")
    if worst_slack:
        slack, key, delta = worst_slack
        print(f"smallest GA1(L) bound slack: {slack:.6f} on {key} (delta={delta})")
    print(f"elapsed: {time.time() - start:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
