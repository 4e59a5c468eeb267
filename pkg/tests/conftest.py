import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from topoline.graph_core import Graph

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if not pairs:
        return Graph(n)
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Graph(n, tuple(edges))


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 7):
    """Random spanning tree plus extra edges; connected by construction."""
    n = draw(st.integers(min_n, max_n))
    tree = tuple(
        (draw(st.integers(0, i - 1)), i) for i in range(1, n)
    )
    spare = [p for p in itertools.combinations(range(n), 2) if p not in set(tree)]
    extra = (
        draw(st.lists(st.sampled_from(spare), unique=True, max_size=len(spare)))
        if spare
        else []
    )
    return Graph(n, tree + tuple(extra))


@st.composite
def nontrivial_graphs(draw, min_n: int = 3, max_n: int = 7):
    """Connected graphs with at least two edges (n >= 3 suffices)."""
    return draw(connected_graphs(min_n=max(min_n, 3), max_n=max_n))
