"""Tests for exact substructure counters."""

import pytest

from specsup.construction.families import complete, cycle, friendship, kplus, kplus2, turan_bipartite
from specsup.counting.bowties import (
    contains_fk,
    count_bowties,
    count_bowties_bruteforce,
    fk_number,
)
from specsup.counting.cover import triangle_cover_number
from specsup.counting.matching import max_matching
from specsup.counting.triangles import (
    booksize,
    booksize_bruteforce,
    count_triangles_bruteforce,
    triangle_count,
    triangle_stats,
    triangular_edge_count,
)
from specsup.enumeration.generator import generate_all


class TestTriangles:
    """Test triangle statistics."""

    def test_complete_graphs(self):
        """Test t(K_4) = 4 and t(K_5) = 10."""
        assert triangle_count(complete(4)) == 4
        assert triangle_count(complete(5)) == 10

    def test_per_vertex_and_edge(self, k5):
        """Test every vertex of K_5 is in 6 triangles and every edge in 3."""
        stats = triangle_stats(k5)
        assert stats.per_vertex == (6,) * 5
        assert set(stats.per_edge.values()) == {3}

    def test_bipartite_has_none(self, turan8):
        """Test a bipartite graph is triangle-free."""
        assert triangle_count(turan8) == 0
        assert booksize(turan8) == 0

    def test_booksize(self, k5):
        """Test the largest book of K_5 has three pages."""
        assert booksize(k5) == 3

    def test_triangular_edges_of_kplus(self):
        """Test K^+_{3,3}: the embedded edge and its six cross edges."""
        assert triangular_edge_count(kplus(6)) == 7

    @pytest.mark.parametrize("n", [3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
    def test_counters_agree_with_brute_force(self, n):
        """Test fast counters against brute force on every graph with n vertices."""
        for g in generate_all(n):
            assert triangle_count(g) == count_triangles_bruteforce(g)
            assert booksize(g) == booksize_bruteforce(g)
            assert count_bowties(g) == count_bowties_bruteforce(g)

    @pytest.mark.slow
    def test_counters_agree_on_random_graphs(self, random_graphs):
        """Test fast counters against brute force on 1000 seeded graphs with at most 12 vertices."""
        for g in random_graphs(1000, 1, 12, seed=2024):
            stats = triangle_stats(g)
            assert stats.total == count_triangles_bruteforce(g)
            assert count_bowties(g) == count_bowties_bruteforce(g)
            assert sum(stats.per_vertex) == 3 * stats.total
            assert sum(stats.per_edge.values()) == 3 * stats.total
            assert len(stats.per_edge) == g.m

    def test_handshake_identities(self):
        """Test per-vertex and per-edge counts each sum to 3t on every graph with 6 vertices."""
        for g in generate_all(6):
            stats = triangle_stats(g)
            assert sum(stats.per_vertex) == 3 * stats.total
            assert sum(stats.per_edge.values()) == 3 * stats.total


class TestBowties:
    """Test bowtie and F_k counting."""

    def test_k5(self, k5):
        """Test K_5 has 15 bowties."""
        assert count_bowties(k5) == 15

    def test_single_bowtie(self):
        """Test F_2 contains exactly one bowtie."""
        assert count_bowties(friendship(2)) == 1

    def test_contains_fk(self):
        """Test F_k containment by neighbourhood matchings."""
        g = friendship(3)
        assert contains_fk(g, 3)
        assert not contains_fk(g, 4)
        assert fk_number(g) == 3
        assert fk_number(cycle(5)) == 0

    def test_contains_fk_rejects_zero(self, k3):
        """Test k must be positive."""
        with pytest.raises(ValueError):
            contains_fk(k3, 0)


class TestCover:
    """Test the triangle covering number."""

    def test_triangle_free(self, c5):
        """Test tau_3 = 0 without triangles."""
        assert triangle_cover_number(c5) == 0

    def test_friendship(self):
        """Test one centre vertex covers F_3."""
        assert triangle_cover_number(friendship(3)) == 1

    def test_k4(self):
        """Test K_4 needs two vertices."""
        assert triangle_cover_number(complete(4)) == 2

    def test_kplus2(self):
        """Test K^{+2} needs one vertex per embedded edge."""
        assert triangle_cover_number(kplus2(8)) == 2


class TestMatching:
    """Test maximum matchings."""

    @pytest.mark.parametrize(
        "graph,expected",
        [
            (cycle(5), 2),
            (turan_bipartite(6), 3),
            (complete(7), 3),
            (friendship(3), 3),
        ],
    )
    def test_matching_numbers(self, graph, expected):
        """Test known matching numbers."""
        assert max_matching(graph) == expected
