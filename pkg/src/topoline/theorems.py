"""Every bound and identity of the catalog as an executable check.

Each check returns a :class:`BoundCheckResult` with the evaluated sides, a
satisfied flag, an equality flag and the slack (rhs - lhs for upper bounds,
lhs - rhs for lower bounds, so satisfied means slack >= 0 up to tolerance).
Rational comparisons are exact; comparisons involving the geometric-arithmetic
index or the hyperbolicity bound fall back to floats with tolerance 1e-9.
Checks whose preconditions fail return a first-class not-applicable result
rather than being skipped, so reports account for coverage.

Catalog (global Delta = max degree, delta_min = min degree, n, m as usual):

T1   M1(G) <= max{2D^2+m^2+(6-2D)m-2D-4, 2D^2+m^2+(4-2D)m+4, m(m-1)}
T2   GA1(G) + GA1(L(G)) <= half of the T1 maximum            [non-trivial]
T3   m_L = P/2,  P = M1 - 2m,  m = (M1 - P)/2                [identities]
T4   sqrt((D-1)(d-1))/(D+d-2) * P <= GA1(L(G)) <= P/2  and
     sqrt(D d)/(D+d) * (M1-P) <= GA1(G) <= (M1-P)/2          [non-trivial]
T5   GA1(L(G)) >= (4 delta(G) - 1)^(3/2) / (2 delta(G))      [connected non-tree]
T6   GA1(G) >= min{1/(2D), 2 sqrt(D d)/(D+d)^2} * M1(G); equality for regular G
T7   M1(L(G)) = 4m - 4 M1(G) + 2 M2(G) + F(G)                [identity]
T8   GA1(L(G)) >= min{1/(4(D-1)), sqrt((D-1)(d-1))/(D+d-2)^2} * M1(L(G))
T9   H(G) <= n/2 (equality iff all components regular) and
     H(L(G)) <= m/2 (equality iff all components regular or biregular)
T10  for integers 3 <= k <= D and x_1..x_k in [1, D], with
     S = sum_j 1/(x_j+k) and T = sum_{i<j} 1/(x_i+x_j+2k-4):
     2/(k-1) * T <= S <= 2(D+2k-3)/(k^2-1) * T   and
     2/(D-1) * T <= S <= (D+3)/4 * T
T11  c_low * H(G) <= H(L(G)) <= c_high * H(G) with
     (c_low, c_high) = (8/11, 1) if D < 3, (4/(D+3), D-1) if 3 <= D <= 4,
     (3/(2D-1), D-1) if D > 4                                 [non-trivial]
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .graph_core import (
    Graph,
    classify_components,
    degree_stats,
    is_connected,
    is_forest,
)
from .hyperbolicity import (
    DEFAULT_VERTEX_CAP,
    HyperbolicityCapError,
    hyperbolicity_constant,
)
from .indices import compute_index_vector, exact_sqrt
from .line_graph import line_graph

REAL_TOLERANCE = 1e-9

Value = Union[Fraction, float]

THEOREM_IDS = tuple(f"T{i}" for i in range(1, 12))


@dataclass(frozen=True, eq=False)
class BoundCheckResult:
    """Outcome of one theorem instance on one input.

    ``branches`` carries sub-inequalities or per-branch values (e.g. the three
    T1 expressions) for auditability; ``satisfied`` on the top-level result is
    the conjunction over all mandatory sub-checks.
    """

    theorem_id: str
    lhs: Value | None
    rhs: Value | None
    satisfied: bool
    equality: bool
    slack: Value | None
    applicable: bool = True
    reason: str = ""
    branches: tuple["BoundCheckResult", ...] = ()

    def __post_init__(self) -> None:
        if self.equality and not self.satisfied:
            raise AssertionError("equality implies satisfied")


@dataclass(frozen=True)
class LemmaInstance:
    """Input tuple for the reciprocal-sum lemma: integers 3 <= k <= max_degree,
    entries 1 <= x_j <= max_degree."""

    k: int
    max_degree: int
    xs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 3 <= self.k <= self.max_degree:
            raise ValueError(f"need 3 <= k <= max_degree, got k={self.k}, D={self.max_degree}")
        if len(self.xs) != self.k:
            raise ValueError(f"need exactly k={self.k} entries, got {len(self.xs)}")
        if any(not 1 <= x <= self.max_degree for x in self.xs):
            raise ValueError(f"entries must lie in [1, {self.max_degree}]: {self.xs}")


def _not_applicable(theorem_id: str, reason: str) -> BoundCheckResult:
    return BoundCheckResult(
        theorem_id, None, None, satisfied=True, equality=False, slack=None,
        applicable=False, reason=reason,
    )


def _is_exact(v: Value) -> bool:
    return isinstance(v, (Fraction, int))


def _compare(theorem_id: str, lhs: Value, rhs: Value, kind: str) -> BoundCheckResult:
    """Build a result for lhs <= rhs ("upper"), lhs >= rhs ("lower") or lhs == rhs."""
    if _is_exact(lhs) and _is_exact(rhs):
        diff = Fraction(rhs) - Fraction(lhs)
        if kind == "upper":
            slack: Value = diff
        elif kind == "lower":
            slack = -diff
        else:
            slack = -abs(diff)
        satisfied = slack >= 0
        equality = diff == 0 and satisfied
    else:
        diff = float(rhs) - float(lhs)
        if kind == "upper":
            slack = diff
        elif kind == "lower":
            slack = -diff
        else:
            slack = -abs(diff)
        satisfied = slack >= -REAL_TOLERANCE
        equality = abs(diff) <= REAL_TOLERANCE and satisfied
    return BoundCheckResult(theorem_id, lhs, rhs, satisfied, equality, slack)


def _combine(theorem_id: str, parts: list[BoundCheckResult], reason: str = "") -> BoundCheckResult:
    satisfied = all(p.satisfied for p in parts)
    equality = satisfied and any(p.equality for p in parts if p.applicable)
    scored = [p for p in parts if p.slack is not None]
    binding = min(scored, key=lambda p: float(p.slack)) if scored else parts[0]
    return BoundCheckResult(
        theorem_id, binding.lhs, binding.rhs, satisfied, equality, binding.slack,
        reason=reason, branches=tuple(parts),
    )


def _standing_violation(g: Graph) -> str | None:
    if g.n == 0:
        return "empty graph"
    if g.m == 0:
        return "no edges"
    if min(g.degrees) == 0:
        return "isolated vertex violates the standing assumption"
    return None


def _sqrt_ratio(num_product: int, denom: int) -> Value:
    """sqrt(num_product)/denom, exact when the radicand is a perfect square."""
    root = exact_sqrt(num_product)
    if root is not None:
        return Fraction(root, denom)
    return math.sqrt(num_product) / denom


def _min_value(a: Value, b: Value) -> Value:
    if _is_exact(a) and _is_exact(b):
        return min(Fraction(a), Fraction(b))
    return a if float(a) <= float(b) else b


def _mul(a: Value, b: Value) -> Value:
    if _is_exact(a) and _is_exact(b):
        return Fraction(a) * Fraction(b)
    return float(a) * float(b)


def _add(a: Value, b: Value) -> Value:
    if _is_exact(a) and _is_exact(b):
        return Fraction(a) + Fraction(b)
    return float(a) + float(b)


def _t1_expressions(max_degree: int, m: int) -> tuple[Fraction, Fraction, Fraction]:
    d = max_degree
    e1 = Fraction(2 * d * d + m * m + (6 - 2 * d) * m - 2 * d - 4)
    e2 = Fraction(2 * d * d + m * m + (4 - 2 * d) * m + 4)
    e3 = Fraction(m * (m - 1))
    return e1, e2, e3


# ---------------------------------------------------------------------------
# T1 .. T11


def check_T1_m1_upper(g: Graph) -> BoundCheckResult:
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T1", violation)
    st = degree_stats(g)
    e1, e2, e3 = _t1_expressions(st.max_degree, st.m)
    lhs = compute_index_vector(g).m1
    top = _compare("T1", lhs, max(e1, e2, e3), "upper")
    # only the max binds; per-expression results are recorded for audit
    branches = (
        _compare("T1.near_max_sum", lhs, e1, "upper"),
        _compare("T1.two_high_degrees", lhs, e2, "upper"),
        _compare("T1.edge_product", lhs, e3, "upper"),
    )
    return BoundCheckResult(
        "T1", top.lhs, top.rhs, top.satisfied, top.equality, top.slack,
        branches=branches,
    )


def check_T2_ga_sum(g: Graph) -> BoundCheckResult:
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T2", violation)
    st = degree_stats(g)
    if not st.is_non_trivial:
        return _not_applicable("T2", "trivial graph (a component has fewer than 2 edges)")
    iv = compute_index_vector(g)
    ivl = compute_index_vector(line_graph(g).line_graph)
    lhs = _add(iv.ga1_value(), ivl.ga1_value())
    rhs = max(_t1_expressions(st.max_degree, st.m)) / 2
    return _compare("T2", lhs, rhs, "upper")


def check_T3_line_identities(g: Graph) -> BoundCheckResult:
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T3", violation)
    st = degree_stats(g)
    if not st.is_non_trivial:
        return _not_applicable("T3", "trivial graph (a component has fewer than 2 edges)")
    iv = compute_index_vector(g)
    m_line = Fraction(line_graph(g).line_graph.m)
    parts = [
        _compare("T3.line_edges", m_line, iv.platt / 2, "identity"),
        _compare("T3.platt", iv.platt, iv.m1 - 2 * st.m, "identity"),
        _compare("T3.edges", Fraction(st.m), (iv.m1 - iv.platt) / 2, "identity"),
    ]
    return _combine("T3", parts)


def check_T4_ga_platt(g: Graph) -> BoundCheckResult:
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T4", violation)
    st = degree_stats(g)
    if not st.is_non_trivial:
        return _not_applicable("T4", "trivial graph (a component has fewer than 2 edges)")
    d_max, d_min = st.max_degree, st.min_degree
    iv = compute_index_vector(g)
    ga = iv.ga1_value()
    ga_line = compute_index_vector(line_graph(g).line_graph).ga1_value()
    platt = iv.platt

    line_coeff = _sqrt_ratio((d_max - 1) * (d_min - 1), d_max + d_min - 2)
    graph_coeff = _sqrt_ratio(d_max * d_min, d_max + d_min)
    two_m = iv.m1 - platt
    parts = [
        _compare("T4.line_lower", ga_line, _mul(line_coeff, platt), "lower"),
        _compare("T4.line_upper", ga_line, platt / 2, "upper"),
        _compare("T4.graph_lower", ga, _mul(graph_coeff, two_m), "lower"),
        _compare("T4.graph_upper", ga, two_m / 2, "upper"),
    ]
    return _combine("T4", parts)


def check_T5_ga_hyperbolicity(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> BoundCheckResult:
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T5", violation)
    st = degree_stats(g)
    if not st.is_non_trivial:
        return _not_applicable("T5", "trivial graph (a component has fewer than 2 edges)")
    if not is_connected(g):
        return _not_applicable("T5", "disconnected graph")
    if is_forest(g):
        return _not_applicable("T5", "tree: hyperbolicity constant is 0")
    try:
        delta = hyperbolicity_constant(g, cap=cap).delta
    except HyperbolicityCapError as exc:
        return _not_applicable("T5", str(exc))
    lhs = compute_index_vector(line_graph(g).line_graph).ga1_value()
    rhs = float(4 * delta - 1) ** 1.5 / float(2 * delta)
    result = _compare("T5", lhs, rhs, "lower")
    return BoundCheckResult(
        "T5", result.lhs, result.rhs, result.satisfied, result.equality,
        result.slack, reason=f"delta={delta}",
    )


def check_T6_ga_vs_m1(g: Graph) -> BoundCheckResult:
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T6", violation)
    st = degree_stats(g)
    d_max, d_min = st.max_degree, st.min_degree
    iv = compute_index_vector(g)
    c1 = Fraction(1, 2 * d_max)
    c2 = _mul(2, _sqrt_ratio(d_max * d_min, (d_max + d_min) ** 2))
    rhs = _mul(_min_value(c1, c2), iv.m1)
    top = _compare("T6", iv.ga1_value(), rhs, "lower")
    # only the min binds; both coefficient branches are recorded for audit
    branches = (
        _compare("T6.max_degree_branch", iv.ga1_value(), _mul(c1, iv.m1), "lower"),
        _compare("T6.mixed_branch", iv.ga1_value(), _mul(c2, iv.m1), "lower"),
    )
    return BoundCheckResult(
        "T6", top.lhs, top.rhs, top.satisfied, top.equality, top.slack,
        branches=branches,
    )


def check_T7_m1_line_identity(g: Graph) -> BoundCheckResult:
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T7", violation)
    st = degree_stats(g)
    if not st.is_non_trivial:
        return _not_applicable("T7", "trivial graph (a component has fewer than 2 edges)")
    iv = compute_index_vector(g)
    lhs = compute_index_vector(line_graph(g).line_graph).m1
    rhs = 4 * st.m - 4 * iv.m1 + 2 * iv.m2 + iv.forgotten
    return _compare("T7", lhs, rhs, "identity")


def check_T8_ga_line_lower(g: Graph) -> BoundCheckResult:
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T8", violation)
    st = degree_stats(g)
    if not st.is_non_trivial:
        return _not_applicable("T8", "trivial graph (a component has fewer than 2 edges)")
    d_max, d_min = st.max_degree, st.min_degree
    iv = compute_index_vector(g)
    lhs = compute_index_vector(line_graph(g).line_graph).ga1_value()
    c1 = Fraction(1, 4 * (d_max - 1))
    c2 = _sqrt_ratio((d_max - 1) * (d_min - 1), (d_max + d_min - 2) ** 2)
    expr = 4 * st.m - 4 * iv.m1 + 2 * iv.m2 + iv.forgotten
    rhs = _mul(_min_value(c1, c2), expr)
    return _compare("T8", lhs, rhs, "lower")


def check_T9_harmonic_bounds(g: Graph) -> BoundCheckResult:
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T9", violation)
    st = degree_stats(g)
    iv = compute_index_vector(g)
    decomposition = classify_components(g)

    parts = [_compare("T9.order_bound", iv.harmonic, Fraction(st.n, 2), "upper")]
    order_equality_ok = parts[0].equality == decomposition.all_regular
    parts.append(
        BoundCheckResult(
            "T9.order_equality_iff_regular", None, None,
            satisfied=order_equality_ok, equality=False, slack=None,
            reason=f"equality={parts[0].equality}, all components regular={decomposition.all_regular}",
        )
    )
    if st.is_non_trivial:
        hl = compute_index_vector(line_graph(g).line_graph).harmonic
        line_bound = _compare("T9.line_bound", hl, Fraction(st.m, 2), "upper")
        parts.append(line_bound)
        flag = decomposition.all_regular_or_biregular
        parts.append(
            BoundCheckResult(
                "T9.line_equality_iff_regular_or_biregular", None, None,
                satisfied=line_bound.equality == flag, equality=False, slack=None,
                reason=f"equality={line_bound.equality}, all components regular-or-biregular={flag}",
            )
        )
        reason = ""
    else:
        reason = "line branch skipped: trivial graph"
    return _combine("T9", parts, reason=reason)


def check_T10_lemma(inst: LemmaInstance) -> BoundCheckResult:
    k, d_max, xs = inst.k, inst.max_degree, inst.xs
    s_sum = sum((Fraction(1, x + k) for x in xs), Fraction(0))
    t_sum = sum(
        (
            Fraction(1, xs[i] + xs[j] + 2 * k - 4)
            for i in range(k)
            for j in range(i + 1, k)
        ),
        Fraction(0),
    )
    parts = [
        _compare("T10.lemma_lower", s_sum, Fraction(2, k - 1) * t_sum, "lower"),
        _compare(
            "T10.lemma_upper",
            s_sum,
            Fraction(2 * (d_max + 2 * k - 3), k * k - 1) * t_sum,
            "upper",
        ),
        _compare("T10.corollary_lower", s_sum, Fraction(2, d_max - 1) * t_sum, "lower"),
        _compare("T10.corollary_upper", s_sum, Fraction(d_max + 3, 4) * t_sum, "upper"),
    ]
    return _combine("T10", parts)


def check_T10_on_graph(g: Graph) -> BoundCheckResult:
    """Instantiate the lemma at every vertex of degree >= 3 (k = d_u, xs = neighbor degrees)."""
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T10", violation)
    st = degree_stats(g)
    hubs = [u for u in range(g.n) if g.degrees[u] >= 3]
    if not hubs:
        return _not_applicable("T10", "no vertex of degree >= 3")
    parts = []
    for u in hubs:
        xs = tuple(sorted(g.degrees[v] for v in g.adjacency[u]))
        inst = LemmaInstance(k=g.degrees[u], max_degree=st.max_degree, xs=xs)
        sub = check_T10_lemma(inst)
        parts.append(
            BoundCheckResult(
                f"T10.vertex{u}", sub.lhs, sub.rhs, sub.satisfied, sub.equality,
                sub.slack, branches=sub.branches,
            )
        )
    return _combine("T10", parts)


def check_T11_harmonic_sandwich(g: Graph) -> BoundCheckResult:
    violation = _standing_violation(g)
    if violation:
        return _not_applicable("T11", violation)
    st = degree_stats(g)
    if not st.is_non_trivial:
        return _not_applicable("T11", "trivial graph (a component has fewer than 2 edges)")
    d_max = st.max_degree
    if d_max < 3:
        lo, hi = Fraction(8, 11), Fraction(1)
    elif d_max <= 4:
        lo, hi = Fraction(4, d_max + 3), Fraction(d_max - 1)
    else:
        lo, hi = Fraction(3, 2 * d_max - 1), Fraction(d_max - 1)
    h = compute_index_vector(g).harmonic
    h_line = compute_index_vector(line_graph(g).line_graph).harmonic
    parts = [
        _compare("T11.lower", h_line, lo * h, "lower"),
        _compare("T11.upper", h_line, hi * h, "upper"),
    ]
    return _combine("T11", parts, reason=f"regime max_degree={d_max}")


#: Per-graph dispatch table used by the verification harness.
GRAPH_CHECKS: dict[str, Callable[[Graph], BoundCheckResult]] = {
    "T1": check_T1_m1_upper,
    "T2": check_T2_ga_sum,
    "T3": check_T3_line_identities,
    "T4": check_T4_ga_platt,
    "T5": check_T5_ga_hyperbolicity,
    "T6": check_T6_ga_vs_m1,
    "T7": check_T7_m1_line_identity,
    "T8": check_T8_ga_line_lower,
    "T9": check_T9_harmonic_bounds,
    "T10": check_T10_on_graph,
    "T11": check_T11_harmonic_sandwich,
}

#: One-line statements for CLI listings and reports.
THEOREM_STATEMENTS: dict[str, str] = {
    "T1": "first Zagreb index bounded by the max of three expressions in (m, max degree)",
    "T2": "GA1(G) + GA1(L(G)) bounded by half the T1 maximum",
    "T3": "line-graph edge count / Platt number / first Zagreb identities",
    "T4": "Platt-number bounds on GA1 of the graph and of its line graph",
    "T5": "GA1 of the line graph bounded below via the hyperbolicity constant",
    "T6": "GA1 bounded below by a min-coefficient multiple of M1 (equality for regular)",
    "T7": "first Zagreb index of the line graph identity (uses the forgotten index)",
    "T8": "GA1 of the line graph bounded below via M1(L(G))",
    "T9": "harmonic index order bounds with regular/biregular equality characterizations",
    "T10": "reciprocal-sum lemma and its fixed-coefficient corollary",
    "T11": "harmonic-index sandwich between a graph and its line graph",
}
