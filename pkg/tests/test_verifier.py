"""Tests for exhaustive verification over generated and streamed graphs."""

import networkx as nx
import numpy as np
import pytest

from specsup.construction.families import complete, cycle
from specsup.core.graph_ops import adjacency_array
from specsup.counting.matching import to_networkx
from specsup.counting.triangles import triangle_count
from specsup.enumeration.generator import generate_all
from specsup.enumeration.verifier import exhaustive_verify
from specsup.models import VerdictStatus
from specsup.theorems.base_predicate import BasePredicate, Conclusion, Hypothesis
from specsup.theorems.registry import PredicateRegistry

PREDICATES = ["P_MANTEL", "P_MM", "P_EFGG", "P_STAR_BOW", "P_NOSAL"]

PROVED = [
    "P_MANTEL", "P_LS", "P_BN", "P_MM", "P_MM_SUP", "P_FAR", "P_EG", "P_AS",
    "P_STAR_TRI", "P_STAR_BOOK", "P_STAR_BOW", "P_NOSAL", "P_NZ_m", "P_NZ_n", "P_XK",
]

CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}


def _complete_bipartite_plus_isolated(g) -> bool:
    h = to_networkx(g)
    h.remove_nodes_from(list(nx.isolates(h)))
    if h.number_of_edges() == 0:
        return True
    if not nx.is_connected(h) or not nx.is_bipartite(h):
        return False
    left, right = nx.bipartite.sets(h)
    return h.number_of_edges() == len(left) * len(right)


class TriangleFree(BasePredicate):
    """Test double asserting every graph is triangle-free."""

    predicate_id = "P_TRIANGLE_FREE"

    def hypothesis(self, ctx):
        return Hypothesis(met=True)

    def conclusion(self, ctx):
        return Conclusion(holds=ctx.triangles == 0, slack=-ctx.triangles)


class TestExhaustiveVerify:
    """Test exhaustive_verify."""

    def test_all_graphs_on_five_vertices(self, registry):
        """Test every graph on 5 vertices satisfies the proved statements."""
        report = exhaustive_verify(PREDICATES, n=5, registry=registry)
        assert report.graphs_checked == 34
        assert report.failure_count == 0
        assert set(report.predicates) == set(PREDICATES)
        for summary in report.predicates.values():
            assert sum(summary.counts.values()) == 34

    def test_deterministic(self, registry):
        """Test repeated runs give identical reports."""
        first = exhaustive_verify(["P_MANTEL", "P_MM"], n=5, registry=registry)
        second = exhaustive_verify(["P_MANTEL", "P_MM"], n=5, registry=registry)
        assert first.model_dump() == second.model_dump()

    def test_worker_count_does_not_change_report(self):
        """Test a process pool gives the same report as a single process."""
        serial = exhaustive_verify(["P_MANTEL", "P_MM"], n=5, workers=1)
        parallel = exhaustive_verify(["P_MANTEL", "P_MM"], n=5, workers=2)
        assert serial.model_dump() == parallel.model_dump()

    def test_stream_input(self, registry):
        """Test a supplied graph stream instead of generation."""
        report = exhaustive_verify(["P_MANTEL"], graphs=[complete(3)], registry=registry)
        assert report.graphs_checked == 1
        assert report.n is None
        assert report.predicates["P_MANTEL"].counts[VerdictStatus.HOLDS.value] == 1

    def test_failures_are_sorted_witnesses(self):
        """Test failing graphs are collected in graph6 order."""
        registry = PredicateRegistry(predicates=[TriangleFree()], family_checks={})
        report = exhaustive_verify(
            ["P_TRIANGLE_FREE"], graphs=[complete(4), cycle(5), complete(3)], registry=registry
        )
        summary = report.predicates["P_TRIANGLE_FREE"]
        assert report.failure_count == 2
        assert summary.failures == sorted(summary.failures)
        assert "Bw" in summary.failures
        assert summary.worst_slack == -4

    def test_needs_n_or_stream(self, registry):
        """Test a missing source is rejected."""
        with pytest.raises(ValueError):
            exhaustive_verify(["P_MANTEL"], registry=registry)


class TestProvedSuite:
    """Test the proved inequalities hold on every graph of small order."""

    @pytest.mark.parametrize(
        "n",
        [1, 2, 3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow),
         pytest.param(8, marks=pytest.mark.slow), pytest.param(9, marks=pytest.mark.slow)],
    )
    def test_no_failures(self, n, registry):
        """Test all fifteen proved predicates report zero failures."""
        report = exhaustive_verify(PROVED, n=n, registry=registry)
        assert report.graphs_checked == CLASS_COUNTS[n]
        assert report.failure_count == 0
        assert set(report.predicates) == set(PROVED)
        for summary in report.predicates.values():
            assert sum(summary.counts.values()) == CLASS_COUNTS[n]
            assert summary.failures == []


class TestBipartiteEquality:
    """Test lambda^3 = 3t + m lambda exactly on complete bipartite graphs plus isolated vertices."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, pytest.param(8, marks=pytest.mark.slow)])
    def test_equality_classes(self, n, registry):
        """Test both inclusions with an eigensolver and a structural check independent of the predicate."""
        equal = 0
        for g in generate_all(n):
            lam = float(np.linalg.eigvalsh(adjacency_array(g))[-1]) if g.m else 0.0
            t = triangle_count(g)
            gap = abs(3 * t + g.m * lam - lam**3)
            structural = _complete_bipartite_plus_isolated(g)
            assert (gap <= 1e-8 * max(1.0, g.m * lam)) == structural
            equal += structural
            verdict = registry.check("P_BN", g)
            assert verdict.status == VerdictStatus.HOLDS
            assert verdict.observed["equality"] == float(structural)
        assert equal > 0


class TestExploratoryScan:
    """Test the below-threshold statements are scanned without failures."""

    @pytest.mark.parametrize(
        "n", [5, 6, 7, pytest.param(8, marks=pytest.mark.slow), pytest.param(9, marks=pytest.mark.slow)]
    )
    def test_findings_not_failures(self, n, registry):
        """Test violations below the stated order are findings in the notApplicable count."""
        report = exhaustive_verify(["P_MAIN1", "P_MAIN2"], n=n, mode="exploratory", registry=registry)
        assert report.mode == "exploratory"
        assert report.failure_count == 0
        for summary in report.predicates.values():
            assert summary.failures == []
            assert len(summary.findings) <= summary.counts[VerdictStatus.NOT_APPLICABLE.value]
            assert summary.findings == sorted(summary.findings)

    def test_strict_mode_skips_below_threshold(self, registry):
        """Test strict mode reports every graph as notApplicable below the threshold."""
        report = exhaustive_verify(["P_MAIN1"], n=5, registry=registry)
        summary = report.predicates["P_MAIN1"]
        assert summary.counts[VerdictStatus.NOT_APPLICABLE.value] == 34
        assert summary.findings == []
