from fractions import Fraction

import pytest

from topoline.graph_core import (
    canonical_form,
    cycle_graph,
    is_isomorphic,
    path_graph,
    star_graph,
)
from topoline.harness import (
    EnumerationCapError,
    EnumerationSpec,
    ExtremalQuery,
    enumerate_graphs,
    enumerate_trees,
    extremal_search,
    run_verification,
    sample_gnp,
)
from topoline.io_formats import emit_graph6, emit_report


class TestEnumeration:
    # Counts cross-checked against the published numbers of connected graphs
    # (1, 2, 6, 21, 112, 853 for n = 2..7) and of all graphs (34, 156, 1044).
    @pytest.mark.parametrize("n,count", [(4, 6), (5, 21), (6, 112)])
    def test_connected_counts(self, n, count):
        spec = EnumerationSpec(n, n, connected_only=True)
        assert sum(1 for _ in enumerate_graphs(spec)) == count

    @pytest.mark.parametrize("n,count", [(4, 11), (5, 34), (6, 156)])
    def test_all_counts(self, n, count):
        assert sum(1 for _ in enumerate_graphs(EnumerationSpec(n, n))) == count

    def test_one_representative_per_class(self):
        keys = [canonical_form(g) for g in enumerate_graphs(EnumerationSpec(5, 5))]
        assert len(keys) == len(set(keys))
        assert keys == sorted(keys)

    def test_cap_error_mentions_file_source(self):
        with pytest.raises(EnumerationCapError, match="graph6 file"):
            list(enumerate_graphs(EnumerationSpec(2, 9)))

    def test_empty_range(self):
        assert list(enumerate_graphs(EnumerationSpec(5, 3))) == []

    def test_non_trivial_filter(self):
        graphs = list(
            enumerate_graphs(EnumerationSpec(2, 3, connected_only=True, non_trivial_only=True))
        )
        assert [g.n for g in graphs] == [3, 3]  # P2 dropped

    def test_file_source(self, tmp_path):
        path = tmp_path / "graphs.g6"
        lines = [emit_graph6(cycle_graph(4)), emit_graph6(star_graph(4)),
                 emit_graph6(cycle_graph(4))]
        path.write_text("\n".join(lines) + "\n")
        spec = EnumerationSpec(2, 10, source=str(path))
        graphs = list(enumerate_graphs(spec))
        assert len(graphs) == 2  # duplicate class collapsed

    def test_tree_counts(self):
        # published tree counts 1, 1, 1, 2, 3, 6, 11, 23 for n = 1..8
        assert [len(enumerate_trees(n)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]

    def test_trees_are_trees(self):
        for t in enumerate_trees(7):
            assert t.m == t.n - 1


class TestRunVerification:
    def test_connected_n4_all_theorems_zero_violations(self):
        report = run_verification(EnumerationSpec(2, 4, connected_only=True, non_trivial_only=True))
        assert report.aggregates()["violations"] == 0

    def test_single_graph_t6_equality(self, tmp_path):
        path = tmp_path / "c4.g6"
        path.write_text(emit_graph6(cycle_graph(4)) + "\n")
        report = run_verification(
            EnumerationSpec(4, 4, source=str(path)), theorems=("T6",)
        )
        assert len(report.records) == 1
        check = report.records[0].checks[0]
        assert check.theorem_id == "T6" and check.equality

    def test_empty_spec_empty_report(self):
        report = run_verification(EnumerationSpec(5, 3))
        assert report.records == ()
        assert report.aggregates()["graphs_checked"] == 0

    def test_unknown_theorem_rejected(self):
        with pytest.raises(ValueError, match="unknown theorem"):
            run_verification(EnumerationSpec(3, 3), theorems=("T42",))

    def test_determinism_across_runs(self):
        spec = EnumerationSpec(2, 4, connected_only=True)
        a = emit_report(run_verification(spec, ("T1", "T3", "T9")), "json")
        b = emit_report(run_verification(spec, ("T1", "T3", "T9")), "json")
        assert a == b


class TestExtremalSearch:
    def test_harmonic_max_trees_is_path(self):
        winners = extremal_search(ExtremalQuery("harmonic", "max", "trees", 6))
        assert len(winners) == 1
        assert is_isomorphic(winners[0][0], path_graph(6))

    def test_harmonic_min_trees_is_star(self):
        winners = extremal_search(ExtremalQuery("harmonic", "min", "trees", 6))
        assert len(winners) == 1
        assert is_isomorphic(winners[0][0], star_graph(6))

    def test_ga1_max_connected_n4(self):
        # GA1 <= m with equality iff regular; K4 has the most edges: value 6
        winners = extremal_search(ExtremalQuery("ga1", "max", "connected", 4))
        assert len(winners) == 1
        g, value = winners[0]
        assert g.m == 6 and float(value) == pytest.approx(6.0)

    def test_delta_max_connected_n5(self):
        winners = extremal_search(ExtremalQuery("delta", "max", "connected", 5))
        assert all(v == Fraction(5, 4) for _, v in winners)
        assert any(is_isomorphic(g, cycle_graph(5)) for g, _ in winners)

    def test_unicyclic_class(self):
        winners = extremal_search(ExtremalQuery("m1", "min", "unicyclic", 5))
        assert all(g.m == g.n for g, _ in winners)
        assert winners[0][1] == 20  # C5 minimizes M1 among unicyclic on 5 vertices

    def test_unknown_index_lists_names(self):
        with pytest.raises(ValueError, match="harmonic"):
            extremal_search(ExtremalQuery("wiener", "max", "trees", 5))

    def test_ties_included(self):
        winners = extremal_search(ExtremalQuery("m1", "max", "trees", 4))
        assert len(winners) == 1  # star dominates at n=4
        values = [v for _, v in winners]
        assert values == [12]


class TestSampleGnp:
    def test_determinism_contract(self):
        assert sample_gnp(30, Fraction(1, 2), 42) == sample_gnp(30, Fraction(1, 2), 42)

    def test_invalid_p(self):
        with pytest.raises(ValueError):
            sample_gnp(5, 1.5, 0)
