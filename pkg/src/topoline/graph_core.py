"""Immutable simple graphs and the structural predicates the theorem checks need.

Vertices are dense 0-indexed integers.  A :class:`Graph` is a hashable value:
two graphs compare equal iff they have the same vertex count and edge set
(labels matter; use :func:`is_isomorphic` for label-free comparison).
Disconnected graphs are first-class; every predicate that the literature states
"per connected component" is evaluated per component here.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

#: Default vertex cap for exact canonicalization (brute force with pruning).
CANONICAL_CAP = 10


class GraphError(ValueError):
    """Invalid graph construction or an out-of-contract operation."""


class CanonicalCapError(GraphError):
    """Graph too large for exact canonicalization."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is normalized on construction: endpoints sorted, duplicates
    removed, pairs stored in lexicographic order.  Loops and out-of-range
    vertices are rejected.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for pair in self.edges:
            u, v = pair
            if u == v:
                raise GraphError(f"loop edge {tuple(pair)!r} is not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {tuple(pair)!r} out of range for n={self.n}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @functools.cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neigh: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neigh[u].add(v)
            neigh[v].add(u)
        return tuple(frozenset(s) for s in neigh)

    @functools.cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        if sum(degs) != 2 * self.m:
            raise AssertionError("degree-sum invariant violated")
        return tuple(degs)

    @functools.cached_property
    def _adj_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a :class:`Graph`, rejecting loops and out-of-range vertices."""
    g = Graph(n, tuple((int(u), int(v)) for u, v in edge_list))
    g.degrees  # populate the cache and run the degree-sum guard
    return g


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel ``g`` by ``perm`` (vertex v becomes perm[v])."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError(f"not a permutation of 0..{g.n - 1}: {perm!r}")
    return Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))


# ---------------------------------------------------------------------------
# Standard small-graph constructors (used heavily by tests and the CLI docs).

def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices: center 0 joined to 1..n-1."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shifted = tuple((u + g1.n, v + g1.n) for u, v in g2.edges)
    return Graph(g1.n + g2.n, g1.edges + shifted)


# ---------------------------------------------------------------------------
# Degrees and components.

@dataclass(frozen=True)
class DegreeStats:
    """Degree extremes plus the non-triviality flag (every component >= 2 edges)."""

    n: int
    m: int
    max_degree: int
    min_degree: int
    is_non_trivial: bool
    degenerate: bool = False  # True only for the empty graph (n == 0)


def components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Connected components as sorted vertex tuples, ordered by smallest vertex."""
    seen = [False] * g.n
    out: list[tuple[int, ...]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        comp = [start]
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return tuple(out)


def _component_edge_count(g: Graph, comp: tuple[int, ...]) -> int:
    cset = set(comp)
    return sum(1 for u, _ in g.edges if u in cset)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        return DegreeStats(0, 0, 0, 0, True, degenerate=True)
    non_trivial = all(_component_edge_count(g, c) >= 2 for c in components(g))
    return DegreeStats(g.n, g.m, max(g.degrees), min(g.degrees), non_trivial)


@dataclass(frozen=True)
class ComponentInfo:
    """One connected component with its classification flags.

    ``regular`` and ``biregular`` are disjoint by convention: biregular means
    the degree set is exactly {a, b} with a != b and every edge joins a
    degree-a endpoint to a degree-b endpoint (the condition under which the
    component's line graph is regular).
    """

    vertices: tuple[int, ...]
    edge_count: int
    regular: bool
    biregular: bool
    degree_pair: tuple[int, int] | None
    path: bool
    cycle: bool
    tree: bool


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[ComponentInfo, ...]

    @property
    def all_regular(self) -> bool:
        return all(c.regular for c in self.components)

    @property
    def all_regular_or_biregular(self) -> bool:
        return all(c.regular or c.biregular for c in self.components)


def classify_components(g: Graph) -> ComponentDecomposition:
    infos = []
    for comp in components(g):
        cset = set(comp)
        mc = _component_edge_count(g, comp)
        nc = len(comp)
        degset = {g.degrees[v] for v in comp}
        regular = len(degset) == 1
        biregular = False
        degree_pair = None
        if len(degset) == 2:
            a, b = sorted(degset, reverse=True)
            if all(
                {g.degrees[u], g.degrees[v]} == {a, b}
                for u, v in g.edges
                if u in cset
            ):
                biregular = True
                degree_pair = (a, b)
        tree = mc == nc - 1
        path = tree and max(g.degrees[v] for v in comp) <= 2
        cycle = nc >= 3 and degset == {2} and mc == nc
        infos.append(
            ComponentInfo(comp, mc, regular, biregular, degree_pair, path, cycle, tree)
        )
    return ComponentDecomposition(tuple(infos))


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


# ---------------------------------------------------------------------------
# Canonical form and isomorphism.
#
# The key is the lexicographically minimal upper-triangular adjacency bit
# string over all vertex permutations, with bits read column by column:
# (0,1), (0,2), (1,2), (0,3), ... (the graph6 bit order).  The search assigns
# positions one at a time; each new position contributes one full column, so
# only candidates achieving the minimal column need to be explored, and tied
# candidates that are interchangeable with an already-kept one are dropped.


def _min_columns(masks: Sequence[int], n: int) -> tuple[int, ...]:
    full = (1 << n) - 1

    def extend(assigned: tuple[int, ...], used: int) -> tuple[int, ...]:
        t = len(assigned)
        if t == n:
            return ()
        groups: dict[int, list[int]] = {}
        for v in range(n):
            if used >> v & 1:
                continue
            col = 0
            mv = masks[v]
            for u in assigned:
                col = (col << 1) | (mv >> u & 1)
            groups.setdefault(col, []).append(v)
        cmin = min(groups)
        kept: list[int] = []
        for v in groups[cmin]:
            mv = masks[v]
            for u in kept:
                # Interchangeable with a kept candidate: same adjacency on
                # everything unassigned apart from u and v themselves.
                rest = full & ~used & ~(1 << u) & ~(1 << v)
                if masks[u] & rest == mv & rest:
                    break
            else:
                kept.append(v)
        best: tuple[int, ...] | None = None
        for v in kept:
            suffix = extend(assigned + (v,), used | (1 << v))
            if best is None or suffix < best:
                best = suffix
        assert best is not None
        return (cmin,) + best

    return extend((), 0)


@functools.lru_cache(maxsize=1 << 17)
def _canonical_key(g: Graph) -> str:
    cols = _min_columns(g._adj_masks, g.n)
    bits = "".join(format(col, f"0{t}b") for t, col in enumerate(cols) if t >= 1)
    return f"{g.n}:{bits}"


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> str:
    """Canonical key: identical keys iff the graphs are isomorphic.

    Brute-force minimal adjacency bit string; cost is exponential in the worst
    case, hence the explicit cap.
    """
    if g.n > cap:
        raise CanonicalCapError(
            f"graph on {g.n} vertices is too large for exact canonicalization (cap {cap})"
        )
    return _canonical_key(g)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by canonical-form comparison.

    Intended for small graphs (n <= 10); larger inputs are accepted but the
    canonical search may be slow.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees) != sorted(g2.degrees):
        return False
    cap = max(CANONICAL_CAP, g1.n)
    return canonical_form(g1, cap=cap) == canonical_form(g2, cap=cap)
