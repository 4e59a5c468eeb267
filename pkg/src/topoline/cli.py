"""Command-line surface: compute, verify, hyperbolicity, extremal, enumerate.

Exit codes: 0 success, 1 bound violations found, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone

from .graph_core import degree_stats
from .harness import (
    ENUMERATION_CAP,
    EnumerationSpec,
    ExtremalQuery,
    enumerate_graphs,
    extremal_search,
    run_verification,
)
from .hyperbolicity import HyperbolicityCapError, hyperbolicity_constant, hyperbolicity_upper_bound
from .indices import IsolatedVertexError, compute_index_vector
from .io_formats import (
    EdgeListError,
    Graph6Error,
    GraphRecord,
    ReportMeta,
    RunReport,
    emit_graph6,
    emit_report,
    format_value,
    parse_edge_list,
    parse_graph6_file,
)
from .line_graph import TrivialComponentError, line_graph
from .theorems import THEOREM_IDS, THEOREM_STATEMENTS

USAGE_ERROR = 2
VIOLATIONS_FOUND = 1


def _read_graphs(path: str, fmt: str):
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if fmt == "graph6":
        return parse_graph6_file(text)
    return [parse_edge_list(text)]


def _cmd_compute(args) -> int:
    graphs = _read_graphs(args.infile, args.format)
    if args.line_graph:
        graphs = [line_graph(g).line_graph for g in graphs]
    records = []
    for g in graphs:
        st = degree_stats(g)
        iv = compute_index_vector(g)
        records.append(
            GraphRecord(
                graph_key=emit_graph6(g),
                graph6=emit_graph6(g),
                n=st.n,
                m=st.m,
                max_degree=st.max_degree,
                min_degree=st.min_degree,
                indices=iv,
                checks=(),
            )
        )
    report = RunReport(meta=ReportMeta(), records=tuple(records))
    if args.emit == "csv":
        lines = ["graph_key,n,m,max_deg,min_deg,m1,m2,forgotten,harmonic,ga1,platt"]
        for rec in records:
            iv = rec.indices
            lines.append(
                ",".join(
                    [rec.graph_key, str(rec.n), str(rec.m), str(rec.max_degree),
                     str(rec.min_degree), format_value(iv.m1), format_value(iv.m2),
                     format_value(iv.forgotten), format_value(iv.harmonic),
                     format_value(iv.ga1), format_value(iv.platt)]
                )
            )
        payload = ("\n".join(lines) + "\n").encode("ascii")
    else:
        payload = emit_report(report, "json")
    with open(args.out, "wb") as fh:
        fh.write(payload)
    return 0


def _cmd_verify(args) -> int:
    if args.theorems == "all":
        theorems = None
    else:
        theorems = tuple(t.strip() for t in args.theorems.split(",") if t.strip())
    spec = EnumerationSpec(
        n_min=args.n_min,
        n_max=args.n_max,
        connected_only=args.connected,
        non_trivial_only=args.non_trivial,
        source=args.source,
    )
    timestamp = None if args.no_timestamp else datetime.now(timezone.utc).isoformat()
    report = run_verification(spec, theorems, timestamp=timestamp)
    fmt = "csv" if args.out.endswith(".csv") else "json"
    with open(args.out, "wb") as fh:
        fh.write(emit_report(report, fmt))
    aggregates = report.aggregates()
    print(
        f"checked {aggregates['graphs_checked']} graphs, "
        f"{aggregates['checks_run']} checks, "
        f"{aggregates['violations']} violations, "
        f"{aggregates['equality_cases']} equality cases"
    )
    for key, tid in aggregates["violation_refs"]:
        print(f"VIOLATION {tid} on {key}")
    return VIOLATIONS_FOUND if aggregates["violations"] else 0


def _cmd_hyperbolicity(args) -> int:
    graphs = _read_graphs(args.infile, args.format)
    for g in graphs:
        label = emit_graph6(g) if g.n <= 62 else f"<n={g.n}>"
        try:
            result = hyperbolicity_constant(g, cap=args.cap)
        except HyperbolicityCapError:
            bound = hyperbolicity_upper_bound(g)
            print(f"{label} delta<=m/4={format_value(bound)} (exact computation capped at n={args.cap})")
            continue
        witness = result.witness
        probe = f" witness probe {witness.probe}" if witness else ""
        print(f"{label} delta={format_value(result.delta)}{probe}")
    return 0


def _cmd_extremal(args) -> int:
    query = ExtremalQuery(
        index=args.index, objective=args.objective,
        graph_class=args.graph_class, n=args.n,
    )
    for g, value in extremal_search(query):
        print(f"{emit_graph6(g)} {format_value(value)}")
    return 0


def _cmd_enumerate(args) -> int:
    spec = EnumerationSpec(n_min=args.n, n_max=args.n, connected_only=args.connected)
    with open(args.out, "w", encoding="ascii") as fh:
        for g in enumerate_graphs(spec):
            fh.write(emit_graph6(g) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topoline",
        description="Degree-based topological indices, line graphs and graph hyperbolicity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute index vectors for graphs in a file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=("graph6", "edgelist"), required=True)
    p.add_argument("--line-graph", action="store_true", help="compute on L(G) instead of G")
    p.add_argument("--out", required=True)
    p.add_argument("--emit", choices=("json", "csv"), required=True)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="run theorem checks over an enumeration or a file")
    p.add_argument("--theorems", required=True,
                   help="comma-separated subset of T1..T11, or 'all'")
    p.add_argument("--n-min", dest="n_min", type=int, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--non-trivial", dest="non_trivial", action="store_true")
    p.add_argument("--source", default=None, help="graph6 file instead of internal enumeration")
    p.add_argument("--out", required=True, help="report path (.csv for CSV, JSON otherwise)")
    p.add_argument("--no-timestamp", action="store_true",
                   help="omit the wall-clock timestamp for byte-reproducible reports")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("hyperbolicity", help="exact hyperbolicity constant of graphs in a file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=("graph6", "edgelist"), required=True)
    p.add_argument("--cap", type=int, default=8, help="vertex cap for exact computation")
    p.set_defaults(func=_cmd_hyperbolicity)

    p = sub.add_parser("extremal", help="graphs attaining an extremal index value")
    p.add_argument("--index", required=True,
                   help="m1|m2|forgotten|harmonic|ga1|platt|delta")
    p.add_argument("--objective", choices=("max", "min"), required=True)
    p.add_argument("--class", dest="graph_class",
                   choices=("all", "trees", "unicyclic", "connected"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("enumerate", help=f"emit graph6 lines, one isomorphism class each (n <= {ENUMERATION_CAP})")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("theorems", help="list the theorem catalog")
    p.set_defaults(func=_cmd_theorems)
    return parser


def _cmd_theorems(args) -> int:
    for tid in THEOREM_IDS:
        print(f"{tid}: {THEOREM_STATEMENTS[tid]}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, EdgeListError, TrivialComponentError, IsolatedVertexError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
