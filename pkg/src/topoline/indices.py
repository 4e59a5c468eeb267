"""Vertex-degree-based topological indices, exact wherever no root appears.

All edge-sum indices follow the shape sum over edges uv of f(d_u, d_v).  The
root-free ones (first/second Zagreb, forgotten, harmonic, Platt) are computed
as exact rationals.  The geometric-arithmetic index carries a square root per
edge and is reported as a float; when every edge product d_u*d_v is a perfect
square (regular graphs, many biregular ones) an exact rational value is kept
alongside so that equality cases never depend on rounding.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .graph_core import Graph

Weight = Union[Fraction, float, int]


class IsolatedVertexError(ValueError):
    """The input violates the standing assumption that every component has an edge."""


def _require_no_isolated(g: Graph) -> None:
    if g.n == 0:
        return
    isolated = [v for v, d in enumerate(g.degrees) if d == 0]
    if isolated:
        raise IsolatedVertexError(
            f"isolated vertices {isolated}: every component needs at least one edge"
        )


def exact_sqrt(k: int) -> int | None:
    """Integer square root of ``k`` if ``k`` is a perfect square, else None."""
    if k < 0:
        return None
    r = math.isqrt(k)
    return r if r * r == k else None


@dataclass(frozen=True)
class IndexVector:
    """All degree-based quantities for one graph.

    ``ga1_exact`` is set iff every edge term of the geometric-arithmetic index
    is rational; it then equals ``ga1`` up to float rounding.
    """

    m1: Fraction
    m2: Fraction
    forgotten: Fraction
    harmonic: Fraction
    ga1: float
    platt: Fraction
    ga1_exact: Fraction | None = None

    def ga1_value(self) -> Fraction | float:
        """Exact geometric-arithmetic value when available, float otherwise."""
        return self.ga1_exact if self.ga1_exact is not None else self.ga1

    def as_dict(self) -> dict[str, Fraction | float | None]:
        return {
            "m1": self.m1,
            "m2": self.m2,
            "forgotten": self.forgotten,
            "harmonic": self.harmonic,
            "ga1": self.ga1,
            "ga1_exact": self.ga1_exact,
            "platt": self.platt,
        }


def evaluate_vdb_index(
    g: Graph, f: Callable[[int, int], Weight]
) -> Fraction | float:
    """Evaluate the edge-sum index sum_{uv in E} f(d_u, d_v).

    ``f`` must be symmetric; symmetry is checked on all degree pairs up to the
    maximum degree before summing.
    """
    _require_no_isolated(g)
    if g.m == 0:
        return Fraction(0)
    dmax = max(g.degrees)
    for a in range(1, dmax + 1):
        for b in range(a + 1, dmax + 1):
            if f(a, b) != f(b, a):
                raise ValueError(f"weight function is not symmetric at ({a}, {b})")
    degs = g.degrees
    return sum(f(degs[u], degs[v]) for u, v in g.edges)


@functools.lru_cache(maxsize=None)
def compute_index_vector(g: Graph) -> IndexVector:
    """Compute every index at once, asserting the internal exact identities."""
    _require_no_isolated(g)
    degs = g.degrees
    m = g.m
    m1_edges = sum(degs[u] + degs[v] for u, v in g.edges)
    m1_squares = sum(d * d for d in degs)
    if m1_edges != m1_squares:
        raise AssertionError("the two first-Zagreb formulas disagree")
    m2 = sum(degs[u] * degs[v] for u, v in g.edges)
    forgotten = sum(d ** 3 for d in degs)
    harmonic = sum((Fraction(2, degs[u] + degs[v]) for u, v in g.edges), Fraction(0))
    platt = sum(degs[u] + degs[v] - 2 for u, v in g.edges)
    if platt != m1_edges - 2 * m:
        raise AssertionError("Platt identity P = M1 - 2m violated")

    ga1_terms: list[float] = []
    ga1_exact: Fraction | None = Fraction(0)
    for u, v in g.edges:
        prod = degs[u] * degs[v]
        ga1_terms.append(2.0 * math.sqrt(prod) / (degs[u] + degs[v]))
        if ga1_exact is not None:
            root = exact_sqrt(prod)
            if root is None:
                ga1_exact = None
            else:
                ga1_exact += Fraction(2 * root, degs[u] + degs[v])
    ga1 = math.fsum(ga1_terms)

    return IndexVector(
        m1=Fraction(m1_edges),
        m2=Fraction(m2),
        forgotten=Fraction(forgotten),
        harmonic=harmonic,
        ga1=ga1,
        platt=Fraction(platt),
        ga1_exact=ga1_exact,
    )


def all_edges_degree_equal(g: Graph) -> bool:
    """Symbolic criterion for GA1 = m: every edge joins equal-degree endpoints."""
    degs = g.degrees
    return all(degs[u] == degs[v] for u, v in g.edges)


def harmonic_of_path(n: int) -> Fraction:
    """Closed form for the harmonic index of the path on ``n`` vertices.

    Equals 1 for n = 2 and (3n - 1)/6 for n >= 3; cross-checked against the
    direct edge sum in the test suite.
    """
    if n < 2:
        raise ValueError(f"path harmonic formula needs n >= 2, got {n}")
    if n == 2:
        return Fraction(1)
    return Fraction(3 * n - 1, 6)

