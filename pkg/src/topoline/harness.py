"""Graph enumeration, sampling, batch verification and extremal search.

Internal enumeration produces exactly one representative per isomorphism
class, ordered by canonical key, by extending each (n-1)-vertex class with
every possible neighborhood of a new vertex and deduplicating on canonical
form.  It is deliberately simple and verifiable; the vertex cap (8) keeps the
cost explicit, and larger runs should feed a graph6 file instead.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .graph_core import (
    CANONICAL_CAP,
    Graph,
    canonical_form,
    degree_stats,
    is_connected,
)
from .hyperbolicity import hyperbolicity_constant
from .indices import IsolatedVertexError, compute_index_vector
from .io_formats import (
    GraphRecord,
    ReportMeta,
    RunReport,
    emit_graph6,
    parse_graph6_file,
)
from .theorems import GRAPH_CHECKS, THEOREM_IDS

ENUMERATION_CAP = 8


class EnumerationCapError(ValueError):
    """Internal enumeration refused; supply a graph6 file for larger orders."""


@dataclass(frozen=True)
class EnumerationSpec:
    n_min: int
    n_max: int
    connected_only: bool = False
    non_trivial_only: bool = False
    source: str | None = None  # path to a graph6 file; None = internal enumeration

    def as_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "connected_only": self.connected_only,
            "non_trivial_only": self.non_trivial_only,
            "source": self.source,
        }


@dataclass(frozen=True)
class ExtremalQuery:
    index: str
    objective: str  # "max" | "min"
    graph_class: str  # "all" | "trees" | "unicyclic" | "connected"
    n: int


@functools.lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, sorted by canonical key."""
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    seen: dict[str, Graph] = {}
    new_vertex = n - 1
    for parent in _all_graphs(n - 1):
        for neighborhood in range(1 << new_vertex):
            extra = tuple(
                (i, new_vertex) for i in range(new_vertex) if neighborhood >> i & 1
            )
            candidate = Graph(n, parent.edges + extra)
            key = canonical_form(candidate)
            if key not in seen:
                seen[key] = candidate
    return tuple(seen[k] for k in sorted(seen))


@functools.lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Graph, ...]:
    """All trees on n vertices up to isomorphism (leaf augmentation + dedup)."""
    if n < 1:
        raise ValueError("trees need n >= 1")
    if n == 1:
        return (Graph(1),)
    seen: dict[str, Graph] = {}
    for parent in enumerate_trees(n - 1):
        for attach in range(n - 1):
            candidate = Graph(n, parent.edges + ((attach, n - 1),))
            key = canonical_form(candidate)
            if key not in seen:
                seen[key] = candidate
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(spec: EnumerationSpec) -> Iterator[Graph]:
    """One representative per isomorphism class, deterministic canonical order."""
    if spec.n_min > spec.n_max:
        return
    if spec.source is not None:
        with open(spec.source, "r", encoding="ascii") as fh:
            graphs = parse_graph6_file(fh.read())
        keyed: dict[str, Graph] = {}
        for g in graphs:
            if not spec.n_min <= g.n <= spec.n_max:
                continue
            key = canonical_form(g) if g.n <= CANONICAL_CAP else emit_graph6(g)
            keyed.setdefault(key, g)
        pool = [keyed[k] for k in sorted(keyed)]
    else:
        if spec.n_max > ENUMERATION_CAP:
            raise EnumerationCapError(
                f"internal enumeration caps at n={ENUMERATION_CAP}; "
                f"pass a graph6 file as the source for larger orders"
            )
        pool = [
            g
            for n in range(spec.n_min, spec.n_max + 1)
            for g in _all_graphs(n)
        ]
    for g in pool:
        if spec.connected_only and not is_connected(g):
            continue
        if spec.non_trivial_only and not degree_stats(g).is_non_trivial:
            continue
        yield g


def sample_gnp(n: int, p: Fraction | float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) sample.

    Deterministic and portable: a Mersenne Twister (``random.Random(seed)``)
    draws one uniform variate per vertex pair in lexicographic order
    (0,1), (0,2), ..., (0,n-1), (1,2), ...; the edge is present iff the
    variate is below p.
    """
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    threshold = float(p)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < threshold
    ]
    return Graph(n, tuple(edges))


def _normalize_theorems(theorems) -> tuple[str, ...]:
    if theorems in (None, "all"):
        return THEOREM_IDS
    ids = tuple(theorems)
    unknown = [t for t in ids if t not in GRAPH_CHECKS]
    if unknown:
        raise ValueError(f"unknown theorem ids {unknown}; valid: {list(THEOREM_IDS)}")
    return tuple(sorted(ids, key=lambda t: int(t[1:])))


def _graph_key(g: Graph) -> str:
    return canonical_form(g) if g.n <= CANONICAL_CAP else emit_graph6(g)


def run_verification(
    spec: EnumerationSpec,
    theorems=None,
    *,
    seed: int | None = None,
    timestamp: str | None = None,
    hyperbolicity_cap: int = 8,
) -> RunReport:
    """Check every (graph, applicable theorem) pair and aggregate the outcome.

    ``timestamp`` is caller-supplied (None by default) so that identical
    inputs serialize to byte-identical reports.
    """
    ids = _normalize_theorems(theorems)
    records = []
    for g in enumerate_graphs(spec):
        st = degree_stats(g)
        try:
            iv = compute_index_vector(g)
            note = ""
        except IsolatedVertexError as exc:
            iv = None
            note = str(exc)
        checks = []
        for tid in ids:
            if tid == "T5":
                checks.append(GRAPH_CHECKS[tid](g, cap=hyperbolicity_cap))
            else:
                checks.append(GRAPH_CHECKS[tid](g))
        records.append(
            GraphRecord(
                graph_key=_graph_key(g),
                graph6=emit_graph6(g) if g.n <= 62 else "",
                n=st.n,
                m=st.m,
                max_degree=st.max_degree,
                min_degree=st.min_degree,
                indices=iv,
                checks=tuple(checks),
                note=note,
            )
        )
    records.sort(key=lambda r: (r.n, r.graph_key))
    meta = ReportMeta(
        timestamp=timestamp, seed=seed, spec=spec.as_dict(), theorems=ids
    )
    return RunReport(meta=meta, records=tuple(records))


#: index name -> callable(Graph) -> Fraction | float
_INDEX_GETTERS = {
    "m1": lambda g: compute_index_vector(g).m1,
    "m2": lambda g: compute_index_vector(g).m2,
    "forgotten": lambda g: compute_index_vector(g).forgotten,
    "harmonic": lambda g: compute_index_vector(g).harmonic,
    "ga1": lambda g: compute_index_vector(g).ga1_value(),
    "platt": lambda g: compute_index_vector(g).platt,
    "delta": lambda g: hyperbolicity_constant(g).delta,
}

_GRAPH_CLASSES = ("all", "trees", "unicyclic", "connected")


def _class_members(graph_class: str, n: int) -> list[Graph]:
    if graph_class == "trees":
        return list(enumerate_trees(n))
    spec = EnumerationSpec(n, n, connected_only=graph_class in ("connected", "unicyclic"))
    pool = list(enumerate_graphs(spec))
    if graph_class == "unicyclic":
        pool = [g for g in pool if g.m == g.n]
    return pool


def extremal_search(q: ExtremalQuery) -> list[tuple[Graph, Fraction | float]]:
    """All graphs of the class attaining the extremal index value (ties included)."""
    if q.index not in _INDEX_GETTERS:
        raise ValueError(
            f"unknown index {q.index!r}; valid names: {sorted(_INDEX_GETTERS)}"
        )
    if q.objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {q.objective!r}")
    if q.graph_class not in _GRAPH_CLASSES:
        raise ValueError(f"unknown class {q.graph_class!r}; valid: {_GRAPH_CLASSES}")
    getter = _INDEX_GETTERS[q.index]
    values: list[tuple[Graph, Fraction | float]] = []
    for g in _class_members(q.graph_class, q.n):
        try:
            values.append((g, getter(g)))
        except IsolatedVertexError:
            continue  # degree-based indices assume every component has an edge
    if not values:
        raise ValueError(f"no eligible graphs in class {q.graph_class!r} at n={q.n}")

    sign = 1 if q.objective == "max" else -1
    exact = all(isinstance(v, (Fraction, int)) for _, v in values)
    if exact:
        best = max((sign * v for _, v in values))
        winners = [(g, v) for g, v in values if sign * v == best]
    else:
        best = max(sign * float(v) for _, v in values)
        winners = [
            (g, v) for g, v in values if abs(sign * float(v) - best) <= 1e-9
        ]
    winners.sort(key=lambda pair: _graph_key(pair[0]))
    return winners
