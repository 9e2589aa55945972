"""Tests for canonical forms, graph6 and isomorph-free generation."""

import io

import networkx as nx
import pytest

from specsup.construction.families import complete, cycle, empty, star, turan_bipartite
from specsup.core.graph_ops import from_edges, relabel
from specsup.counting.matching import to_networkx
from specsup.enumeration.canonical import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    permutation_filter_classes,
)
from specsup.enumeration.generator import augment, generate_all
from specsup.enumeration.graph6 import graph6_decode, graph6_encode, graph6_read_stream
from specsup.exceptions import Graph6ParseError, GraphSizeError


class TestCanonicalForm:
    """Test canonical forms."""

    def test_relabelled_cycle(self, c5):
        """Test a relabelled C_5 has the same form."""
        shuffled = relabel(c5, [3, 0, 4, 1, 2])
        assert canonical_form(shuffled) == canonical_form(c5)
        assert are_isomorphic(shuffled, c5)

    def test_path_and_star_differ(self):
        """Test P_4 and K_{1,3} are not isomorphic."""
        path = from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert not are_isomorphic(path, star(3))

    def test_same_degrees_different_graphs(self):
        """Test C_6 and two triangles share degrees but not forms."""
        two_triangles = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not are_isomorphic(cycle(6), two_triangles)

    def test_canonical_graph_is_idempotent(self, turan8):
        """Test relabelling into canonical order twice changes nothing."""
        once = canonical_graph(turan8)
        assert canonical_graph(once) == once

    def test_matches_networkx(self):
        """Test isomorphism decisions against networkx on relabelled graphs with 5 vertices."""
        graphs = [relabel(g, [4, 2, 0, 3, 1]) for g in generate_all(5)][::3]
        for g in graphs:
            for h in graphs:
                expected = nx.is_isomorphic(to_networkx(g), to_networkx(h))
                assert are_isomorphic(g, h) == expected


class TestGraph6:
    """Test graph6 encoding and decoding."""

    def test_triangle(self, k3):
        """Test K_3 encodes as Bw."""
        assert graph6_encode(k3) == "Bw"
        assert graph6_decode("Bw") == k3

    def test_empty_graph(self):
        """Test the zero-vertex graph."""
        assert graph6_decode(graph6_encode(empty(0))).n == 0

    def test_header_is_stripped(self):
        """Test the optional header."""
        assert graph6_decode(">>graph6<<Bw").m == 3

    def test_bad_byte_offset(self):
        """Test a byte outside 63..126 is reported at its offset."""
        with pytest.raises(Graph6ParseError) as exc_info:
            graph6_decode("B w")
        assert exc_info.value.offset == 1

    def test_non_ascii_character(self):
        """Test a character outside ASCII is rejected instead of decoded."""
        with pytest.raises(Graph6ParseError) as exc_info:
            graph6_decode("B\u00e9")
        assert exc_info.value.offset == 1

    def test_non_ascii_in_stream(self):
        """Test a non-ASCII line in a stream is reported with its line number."""
        with pytest.raises(Graph6ParseError) as exc_info:
            list(graph6_read_stream(["Bw", "\u00e9w"]))
        assert exc_info.value.offset == 0
        assert "line 2" in str(exc_info.value)

    def test_truncated_body(self):
        """Test a body that is too short."""
        with pytest.raises(Graph6ParseError):
            graph6_decode("E")

    def test_trailing_data(self):
        """Test extra bytes after the body."""
        with pytest.raises(Graph6ParseError):
            graph6_decode("Bww")

    def test_large_graph(self):
        """Test a graph beyond the one-byte size field."""
        g = turan_bipartite(70)
        assert graph6_encode(g).startswith("~")
        assert graph6_decode(graph6_encode(g)) == g

    def test_read_stream(self):
        """Test the stream reader skips blank lines and the header."""
        stream = io.StringIO(">>graph6<<Bw\n\nBw\n")
        assert [g.m for g in graph6_read_stream(stream)] == [3, 3]

    def test_read_stream_reports_line(self):
        """Test parse errors carry the line number."""
        with pytest.raises(Graph6ParseError) as exc_info:
            list(graph6_read_stream(["Bw", "B"]))
        assert "line 2" in str(exc_info.value)


class TestGenerator:
    """Test isomorph-free generation."""

    @pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
    def test_class_counts(self, n, expected):
        """Test the number of graphs up to isomorphism."""
        assert sum(1 for _ in generate_all(n)) == expected

    @pytest.mark.slow
    def test_class_count_seven(self):
        """Test the 1044 graphs on 7 vertices."""
        assert sum(1 for _ in generate_all(7)) == 1044

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_matches_permutation_filter(self, n):
        """Test generation against brute force over all labelled graphs."""
        assert sum(1 for _ in generate_all(n)) == permutation_filter_classes(n)

    @pytest.mark.slow
    def test_matches_permutation_filter_seven(self):
        """Test the brute-force orbit count on 7 vertices."""
        classes = permutation_filter_classes(7)
        assert classes == 1044
        assert sum(1 for _ in generate_all(7)) == classes

    def test_no_duplicates(self):
        """Test every generated graph is a distinct class."""
        forms = [canonical_form(g) for g in generate_all(6)]
        assert len(set(forms)) == len(forms)

    def test_sorted_by_graph6(self):
        """Test output order is by graph6."""
        codes = [graph6_encode(g) for g in generate_all(5)]
        assert codes == sorted(codes)

    def test_augment_triangle(self, k3):
        """Test K_3 has four canonical children classes at most."""
        children = augment(k3)
        assert 1 <= len(children) <= 4
        assert all(g.n == 4 for g in children)

    def test_size_limit(self):
        """Test generation refuses more than 10 vertices."""
        with pytest.raises(GraphSizeError):
            list(generate_all(11))

    def test_complete_graph_generated(self):
        """Test K_5 is among the generated graphs."""
        target = canonical_form(complete(5))
        assert any(canonical_form(g) == target for g in generate_all(5))
