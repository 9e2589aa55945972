"""Tests for graph construction, mutation, bipartiteness and max-cut."""

import pytest

from specsup.construction.families import complete, empty, star
from specsup.core.bipartition import bad_sets, max_cut
from specsup.core.graph_ops import (
    complement,
    disjoint_union,
    from_edges,
    induced_subgraph,
    is_bipartite,
    is_complete_bipartite,
    make_bipartition,
    relabel,
    toggle_edge,
)
from specsup.exceptions import GraphConstructionError, GraphSizeError


class TestFromEdges:
    """Test from_edges."""

    def test_triangle(self):
        """Test the smallest complete graph."""
        g = from_edges(3, [(0, 1), (1, 2), (0, 2)])
        assert g.m == 3

    def test_empty(self):
        """Test an edgeless graph."""
        assert from_edges(4, []).m == 0

    def test_cycle_degrees(self, c5):
        """Test every vertex of C_5 has degree 2."""
        assert c5.m == 5
        assert all(c5.degree(v) == 2 for v in range(5))

    def test_duplicates_removed(self):
        """Test repeated pairs collapse to one edge."""
        assert from_edges(3, [(0, 1), (1, 0), (0, 1)]).m == 1

    def test_out_of_range_endpoint(self):
        """Test an endpoint outside 0..n-1 is rejected."""
        with pytest.raises(GraphConstructionError):
            from_edges(3, [(0, 3)])

    def test_loop(self):
        """Test a loop is rejected."""
        with pytest.raises(GraphConstructionError):
            from_edges(3, [(1, 1)])


class TestToggleEdge:
    """Test toggle_edge."""

    def test_remove_edge(self, k3):
        """Test toggling a present edge leaves a path."""
        g = toggle_edge(k3, 0, 1)
        assert g.m == 2
        assert not g.has_edge(0, 1)
        assert k3.has_edge(0, 1)

    def test_involution(self, k5):
        """Test toggling twice restores the graph."""
        assert toggle_edge(toggle_edge(k5, 1, 3), 1, 3) == k5

    def test_add_edge(self):
        """Test toggling an absent pair adds it."""
        g = toggle_edge(empty(3), 0, 1)
        assert g.m == 1
        assert g.has_edge(1, 0)

    def test_loop_rejected(self, k3):
        """Test toggling a loop is an error."""
        with pytest.raises(GraphConstructionError):
            toggle_edge(k3, 2, 2)


class TestBipartiteness:
    """Test is_bipartite and is_complete_bipartite."""

    def test_complete_bipartite_colouring(self, turan8):
        """Test T_{8,2} is 2-coloured with no inside edges."""
        p = is_bipartite(turan8)
        assert p is not None
        assert p.e_s == 0 and p.e_t == 0
        assert p.e_st == 16

    def test_odd_cycle(self, k3):
        """Test K_3 has no 2-colouring."""
        assert is_bipartite(k3) is None

    def test_union_with_odd_cycle(self, c5):
        """Test C_4 + C_5 is not bipartite."""
        c4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert is_bipartite(disjoint_union(c4, c5)) is None

    def test_complete_bipartite_detection(self, turan8, c5):
        """Test complete bipartite detection with and without isolated vertices."""
        assert is_complete_bipartite(turan8)
        assert not is_complete_bipartite(c5)
        with_isolated = disjoint_union(star(3), empty(2))
        assert is_complete_bipartite(with_isolated)
        assert not is_complete_bipartite(with_isolated, allow_isolated=False)


class TestHelpers:
    """Test structural helpers."""

    def test_complement_of_complete(self, k5):
        """Test the complement of K_5 is edgeless."""
        assert complement(k5).m == 0

    def test_induced_subgraph(self, k5):
        """Test an induced subgraph of K_5 is complete."""
        assert induced_subgraph(k5, [0, 2, 4]).m == 3

    def test_relabel_requires_permutation(self, k3):
        """Test relabel rejects a non-permutation."""
        with pytest.raises(GraphConstructionError):
            relabel(k3, [0, 0, 1])

    def test_make_bipartition_counts(self, k5):
        """Test cached counts of a bipartition add up to m."""
        p = make_bipartition(k5, [0, 0, 1, 1, 1])
        assert (p.e_s, p.e_t, p.e_st) == (1, 3, 6)
        assert p.s_size == 2 and p.t_size == 3


class TestMaxCut:
    """Test max_cut and bad_sets."""

    def test_triangle(self, k3):
        """Test D(K_3) = 1."""
        result = max_cut(k3, "exact")
        assert result.value == 1
        assert result.exact

    def test_k5(self, k5):
        """Test D(K_5) = 4 with a witness attaining it."""
        result = max_cut(k5, "exact")
        assert result.value == 4
        assert result.witness.e_s + result.witness.e_t == 4

    def test_bipartite_is_zero(self, turan8):
        """Test D = 0 for a bipartite graph."""
        assert max_cut(turan8, "exact").value == 0

    def test_exact_size_limit(self):
        """Test exact mode refuses more than 28 vertices."""
        with pytest.raises(GraphSizeError):
            max_cut(empty(29), "exact")

    def test_heuristic_is_upper_bound(self, k5):
        """Test the heuristic never beats the exact value."""
        result = max_cut(k5, "heuristic", seed=3)
        assert not result.exact
        assert result.value >= 4

    @pytest.mark.parametrize("n", range(8, 21))
    def test_heuristic_never_beats_exact(self, n, random_graphs):
        """Test the local-search distance is an upper bound on random graphs."""
        (g,) = random_graphs(1, n, n, seed=n)
        exact = max_cut(g, "exact")
        heuristic = max_cut(g, "heuristic", seed=n)
        assert heuristic.value >= exact.value
        assert heuristic.witness.e_s + heuristic.witness.e_t == heuristic.value
        assert exact.witness.e_s + exact.witness.e_t == exact.value

    def test_bad_sets_of_balanced_bipartite(self, turan8):
        """Test T_{8,2} has no low-degree or heavy vertices."""
        p = max_cut(turan8, "exact").witness
        assert bad_sets(turan8, p) == (set(), set())

    def test_bad_sets_of_star(self):
        """Test the leaves of a star are low-degree."""
        g = star(5)
        p = make_bipartition(g, [0, 1, 1, 1, 1, 1])
        low, heavy = bad_sets(g, p)
        assert low == {1, 2, 3, 4, 5}
        assert heavy == set()

    def test_complete_graph_is_not_bipartite(self):
        """Test K_4 has positive distance."""
        assert max_cut(complete(4), "exact").value == 2
