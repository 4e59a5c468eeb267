"""Exact Gromov hyperbolicity of unit-edge metric graphs at desk scale.

The hyperbolicity constant delta(G) is the least t such that in every geodesic
triangle, each side lies in the t-neighborhood of the union of the other two
sides, where points range over the whole metric graph (every edge has length
1).  For such graphs delta is an integer multiple of 1/4, which makes a finite
computation possible:

* every edge is subdivided into ``granularity`` equal segments, giving a
  lattice on which shortest-path distances are exact rationals;
* triangle corners range over the quarter-lattice (offsets that are multiples
  of 1/4), probe points over the full lattice;
* for a probe point p and a corner pair (a, b), the largest distance from p to
  *some* geodesic a-b is a bottleneck-path value over the geodesic DAG of
  (a, b), and the two far sides of a triangle maximize independently, so no
  explicit enumeration of geodesic triangles is needed — all geodesic choices
  (including non-unique geodesics and degenerate two-corner triangles) are
  still covered exactly.

The pointwise distance-to-union function is piecewise linear with slopes in
{-1, 0, 1} along the probed side, so the sampled maximum is within half a
lattice step of the true supremum; since the true value sits on the
quarter-integer grid, the sampled maximum recovers it exactly.  Should the
sampled value ever fall strictly between quarter-integers the result is
rounded up (delta is certified from below by an explicit triangle) and the
``rounded_up`` flag is set; the test suite asserts this never happens.
"""

from __future__ import annotations

import functools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .graph_core import Graph, components, is_forest

GRANULARITIES = (2, 4, 8)
DEFAULT_GRANULARITY = 8
DEFAULT_VERTEX_CAP = 8


class HyperbolicityCapError(ValueError):
    """Exact computation refused; fall back to the m/4 upper bound."""


@dataclass(frozen=True)
class MetricPoint:
    """A point of the metric graph: ``offset`` along ``edge`` from its first endpoint.

    Offsets live on the working lattice (multiples of 1/8, which covers every
    supported granularity).  Vertex points are written with the degenerate
    pair ``(v, v)`` and offset 0.
    """

    edge: tuple[int, int]
    offset: Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.offset <= 1:
            raise ValueError(f"offset must lie in [0, 1], got {self.offset}")
        if (self.offset * 8).denominator != 1:
            raise ValueError(f"offset must be a multiple of 1/8, got {self.offset}")

    @staticmethod
    def at_vertex(v: int) -> "MetricPoint":
        return MetricPoint((v, v), Fraction(0))

    @property
    def is_vertex(self) -> bool:
        return self.edge[0] == self.edge[1] or self.offset in (0, 1)

    def __str__(self) -> str:
        if self.edge[0] == self.edge[1]:
            return f"v{self.edge[0]}"
        return f"({self.edge[0]}-{self.edge[1]})@{self.offset}"


@dataclass(frozen=True, eq=False)
class SubdividedLattice:
    """All-pairs exact distances on the subdivision lattice of a graph.

    ``hops[i, j]`` is the shortest-path distance in units of 1/granularity,
    or -1 when the points lie in different components.
    """

    graph: Graph
    granularity: int
    points: tuple[MetricPoint, ...]
    hops: np.ndarray
    adjacency: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]

    def distance(self, i: int, j: int) -> Fraction | float:
        h = int(self.hops[i, j])
        if h < 0:
            return math.inf
        return Fraction(h, self.granularity)

    def vertex_index(self, v: int) -> int:
        return v  # vertices occupy lattice slots 0..n-1 by construction


def subdivided_distances(g: Graph, granularity: int) -> SubdividedLattice:
    """Split each edge into ``granularity`` segments and BFS all lattice pairs."""
    if granularity not in GRANULARITIES:
        raise ValueError(f"granularity must be one of {GRANULARITIES}, got {granularity}")
    k = granularity
    points: list[MetricPoint] = [MetricPoint.at_vertex(v) for v in range(g.n)]
    adj: list[list[int]] = [[] for _ in range(g.n)]

    def link(a: int, b: int) -> None:
        adj[a].append(b)
        adj[b].append(a)

    for u, v in g.edges:
        prev = u
        for step in range(1, k):
            idx = len(points)
            points.append(MetricPoint((u, v), Fraction(step, k)))
            adj.append([])
            link(prev, idx)
            prev = idx
        link(prev, v)

    size = len(points)
    hops = np.full((size, size), -1, dtype=np.int32)
    for src in range(size):
        row = hops[src]
        row[src] = 0
        queue = deque([src])
        while queue:
            cur = queue.popleft()
            d = row[cur] + 1
            for nxt in adj[cur]:
                if row[nxt] < 0:
                    row[nxt] = d
                    queue.append(nxt)

    comp_of_vertex: dict[int, int] = {}
    for ci, comp in enumerate(components(g)):
        for v in comp:
            comp_of_vertex[v] = ci
    component_of = tuple(comp_of_vertex[p.edge[0]] for p in points)
    return SubdividedLattice(
        graph=g,
        granularity=k,
        points=tuple(points),
        hops=hops,
        adjacency=tuple(tuple(a) for a in adj),
        component_of=component_of,
    )


@dataclass(frozen=True, eq=False)
class GeodesicTriangle:
    """Witness triangle: ``sides[i]`` joins the two corners other than ``corners[i]``."""

    corners: tuple[MetricPoint, MetricPoint, MetricPoint]
    sides: tuple[tuple[MetricPoint, ...], ...]
    probe: MetricPoint
    probe_side: int


@dataclass(frozen=True, eq=False)
class HyperbolicityResult:
    """``witness`` is None exactly when delta is 0 (every triangle is trivially thin)."""

    delta: Fraction
    witness: GeodesicTriangle | None
    granularity: int
    corner_points: int
    evaluations: int
    rounded_up: bool


def hyperbolicity_upper_bound(g: Graph) -> Fraction:
    """The m/4 bound; used beyond the exact-computation cap and as an invariant."""
    return Fraction(g.m, 4)


def hyperbolicity_constant(
    g: Graph,
    granularity: int = DEFAULT_GRANULARITY,
    cap: int = DEFAULT_VERTEX_CAP,
) -> HyperbolicityResult:
    """Exact delta(G); disconnected graphs take the maximum over components."""
    if g.n > cap:
        raise HyperbolicityCapError(
            f"n={g.n} exceeds the exact-computation cap {cap}; "
            f"fall back to hyperbolicity_upper_bound() = m/4"
        )
    return _hyperbolicity(g, granularity)


def _geodesic_walk(D: np.ndarray, adj: list[list[int]], frm: int, to: int) -> list[int]:
    # Deterministic geodesic: always step to the smallest-index point closer to `to`.
    path = [frm]
    cur = frm
    while cur != to:
        cur = min(r for r in adj[cur] if D[to, r] == D[to, cur] - 1)
        path.append(cur)
    return path


def _bottleneck_table(
    D: np.ndarray, adj: list[list[int]], on_geo: np.ndarray, a: int, b: int
) -> np.ndarray:
    """For every probe point p: max over geodesics a-b of min hop distance p-to-path."""
    nodes = np.flatnonzero(on_geo)
    order = sorted(nodes, key=lambda q: -int(D[a, q]))
    table: dict[int, np.ndarray] = {}
    for q in order:
        if q == b:
            table[q] = D[b]
            continue
        succ = [r for r in adj[q] if on_geo[r] and D[a, r] == D[a, q] + 1]
        acc = table[succ[0]]
        for r in succ[1:]:
            acc = np.maximum(acc, table[r])
        table[q] = np.minimum(D[q], acc)
    return table[a]


def _bottleneck_path(
    D: np.ndarray, adj: list[list[int]], on_geo: np.ndarray, a: int, b: int, p: int
) -> list[int]:
    """A geodesic a-b attaining the bottleneck value for probe point p."""
    nodes = np.flatnonzero(on_geo)
    order = sorted(nodes, key=lambda q: -int(D[a, q]))
    val: dict[int, int] = {}
    for q in order:
        if q == b:
            val[q] = int(D[b, p])
            continue
        succ = [r for r in adj[q] if on_geo[r] and D[a, r] == D[a, q] + 1]
        val[q] = min(int(D[q, p]), max(val[r] for r in succ))
    path = [a]
    cur = a
    while cur != b:
        succ = [r for r in adj[cur] if on_geo[r] and D[a, r] == D[a, cur] + 1]
        cur = min(succ, key=lambda r: (-val[r], r))
        path.append(cur)
    return path


def _component_delta(lat: SubdividedLattice, ids: list[int]):
    """Max sampled triangle value (in hops) over one component's lattice points."""
    local_index = {gid: i for i, gid in enumerate(ids)}
    D = lat.hops[np.ix_(ids, ids)].astype(np.int32)
    adj = [
        [local_index[r] for r in lat.adjacency[gid] if r in local_index]
        for gid in ids
    ]
    quarter = [
        i
        for i, gid in enumerate(ids)
        if (lat.points[gid].offset * 4).denominator == 1
    ]

    unions: dict[tuple[int, int], np.ndarray] = {}
    farthest: dict[tuple[int, int], np.ndarray] = {}
    for a, b in combinations(quarter, 2):
        on_geo = (D[a] + D[b]) == D[a, b]
        unions[(a, b)] = on_geo
        farthest[(a, b)] = _bottleneck_table(D, adj, on_geo, a, b)

    best = 0
    best_args: tuple | None = None
    evaluations = 0

    def key(x: int, y: int) -> tuple[int, int]:
        return (x, y) if x < y else (y, x)

    # Degenerate triangles (two corners coincide): probe a geodesic a-b against
    # the union of a second a-b geodesic and the repeated corner.
    for a, b in combinations(quarter, 2):
        far = farthest[(a, b)]
        mask = unions[(a, b)]
        for corner in (a, b):
            vals = np.minimum(D[corner], far)[mask]
            evaluations += 1
            v = int(vals.max())
            if v > best:
                best = v
                p = int(np.flatnonzero(mask)[int(vals.argmax())])
                best_args = ("bigon", corner, (a, b), p)

    # Proper corner triples: probe each side against the two opposite sides.
    for x, y, z in combinations(quarter, 3):
        for apex, (e1, e2) in ((x, (y, z)), (y, (x, z)), (z, (x, y))):
            vals = np.minimum(farthest[key(apex, e1)], farthest[key(apex, e2)])[
                unions[key(e1, e2)]
            ]
            evaluations += 1
            v = int(vals.max())
            if v > best:
                best = v
                mask = unions[key(e1, e2)]
                p = int(np.flatnonzero(mask)[int(vals.argmax())])
                best_args = ("triple", apex, (e1, e2), p)

    witness = None
    if best_args is not None:
        witness = _build_witness(lat, ids, D, adj, best_args)
    return best, witness, evaluations, len(quarter)


def _build_witness(lat, ids, D, adj, args) -> GeodesicTriangle:
    kind, apex, (e1, e2), p = args

    def pts(path: list[int]) -> tuple[MetricPoint, ...]:
        return tuple(lat.points[ids[i]] for i in path)

    def far_side(a: int, b: int) -> list[int]:
        on_geo = (D[a] + D[b]) == D[a, b]
        return _bottleneck_path(D, adj, on_geo, a, b, p)

    if kind == "bigon":
        a, b = e1, e2
        corner = apex
        other = b if corner == a else a
        probe_path = _geodesic_walk(D, adj, other, p) + _geodesic_walk(D, adj, p, corner)[1:]
        corners = (
            lat.points[ids[other]],
            lat.points[ids[corner]],
            lat.points[ids[corner]],
        )
        sides = (
            (lat.points[ids[corner]],),          # opposite "other": corner-corner
            tuple(pts(far_side(a, b))),          # second geodesic between the corners
            tuple(pts(probe_path)),              # geodesic carrying the probe
        )
        return GeodesicTriangle(corners, sides, lat.points[ids[p]], probe_side=2)

    probe_path = (
        _geodesic_walk(D, adj, e1, p) + _geodesic_walk(D, adj, p, e2)[1:]
    )
    corners = (lat.points[ids[apex]], lat.points[ids[e1]], lat.points[ids[e2]])
    sides = (
        tuple(pts(probe_path)),        # joins e1-e2, opposite the apex
        tuple(pts(far_side(apex, e2))),
        tuple(pts(far_side(apex, e1))),
    )
    return GeodesicTriangle(corners, sides, lat.points[ids[p]], probe_side=0)


@functools.lru_cache(maxsize=None)
def _hyperbolicity(g: Graph, granularity: int) -> HyperbolicityResult:
    lat = subdivided_distances(g, granularity)
    by_comp: dict[int, list[int]] = {}
    for i, ci in enumerate(lat.component_of):
        by_comp.setdefault(ci, []).append(i)

    best = 0
    witness = None
    evaluations = 0
    corner_points = 0
    for ci in sorted(by_comp):
        ids = by_comp[ci]
        if len(ids) < 2:
            continue
        b, w, ev, q = _component_delta(lat, ids)
        evaluations += ev
        corner_points += q
        if b > best:
            best = b
            witness = w
        elif witness is None and w is not None and b == best:
            witness = w

    value = Fraction(best, granularity)
    quarters = value * 4
    if quarters.denominator == 1:
        delta = value
        rounded = False
    else:
        delta = Fraction(math.ceil(quarters), 4)
        rounded = True

    _validate_structural_facts(g, delta)
    return HyperbolicityResult(
        delta=delta,
        witness=witness,
        granularity=granularity,
        corner_points=corner_points,
        evaluations=evaluations,
        rounded_up=rounded,
    )


def _validate_structural_facts(g: Graph, delta: Fraction) -> None:
    # Proven facts about delta of simple unit-edge graphs; a violation here
    # means the computation itself is broken, so fail loudly.
    if (delta * 4).denominator != 1:
        raise RuntimeError(f"delta={delta} is not a quarter-integer")
    if delta in (Fraction(1, 4), Fraction(1, 2)):
        raise RuntimeError(f"delta={delta} is impossible for a simple graph")
    if is_forest(g):
        if delta != 0:
            raise RuntimeError(f"forest must have delta 0, computed {delta}")
    elif delta < Fraction(3, 4):
        raise RuntimeError(f"non-forest must have delta >= 3/4, computed {delta}")
    if delta > hyperbolicity_upper_bound(g):
        raise RuntimeError(f"delta={delta} exceeds the m/4 bound {hyperbolicity_upper_bound(g)}")
