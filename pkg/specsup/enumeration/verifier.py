"""Exhaustive verification of theorem predicates over graph streams."""

import logging
import time
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import cache
from itertools import islice

from ..models import Graph, PredicateSummary, VerdictStatus, Verdict, VerificationReport
from ..theorems.base_predicate import Mode
from ..theorems.registry import PredicateRegistry
from .generator import generate_all
from .graph6 import graph6_decode, graph6_encode

logger = logging.getLogger(__name__)

_BATCH = 256


@cache
def _default_registry() -> PredicateRegistry:
    return PredicateRegistry()


def _evaluate_batch(
    job: tuple[tuple[str, ...], Mode, tuple[str, ...]],
) -> list[tuple[str, list[Verdict]]]:
    predicate_ids, mode, codes = job
    registry = _default_registry()
    return [
        (code, registry.check_many(predicate_ids, graph6_decode(code), mode)) for code in codes
    ]


def _batches(graphs: Iterable[Graph]) -> Iterator[tuple[str, ...]]:
    it = iter(graphs)
    while batch := tuple(graph6_encode(g) for g in islice(it, _BATCH)):
        yield batch


def absorb(summary: PredicateSummary, verdict: Verdict, code: str) -> None:
    """Fold one verdict into a summary; the result does not depend on arrival order once finalized."""
    summary.counts[verdict.status.value] += 1
    if verdict.status == VerdictStatus.FAILS:
        summary.failures.append(code)
    elif verdict.status == VerdictStatus.WITHIN_TOLERANCE:
        summary.borderline.append(code)
    if verdict.finding:
        summary.findings.append(code)
    if verdict.slack is not None and (verdict.hypothesis_met or verdict.finding):
        candidate = (verdict.slack, code)
        current = (summary.worst_slack, summary.worst_slack_graph6 or "")
        if summary.worst_slack is None or candidate < current:
            summary.worst_slack = verdict.slack
            summary.worst_slack_graph6 = code
    for key, value in verdict.observed.items():
        if key not in summary.observed_max or value > summary.observed_max[key]:
            summary.observed_max[key] = value


def finalize(summary: PredicateSummary) -> None:
    summary.failures.sort()
    summary.findings.sort()
    summary.borderline.sort()


def exhaustive_verify(
    predicate_ids: Sequence[str],
    n: int | None = None,
    mode: Mode = "strict",
    graphs: Iterable[Graph] | None = None,
    workers: int = 1,
    registry: PredicateRegistry | None = None,
) -> VerificationReport:
    """Run predicates on every graph on n vertices, or on a supplied stream.

    Args:
        predicate_ids: Registered predicate ids
        n: Vertex count for in-process generation (ignored when graphs is given)
        mode: strict or exploratory threshold handling
        graphs: External graph stream
        workers: Processes for evaluation
        registry: Predicate registry (default: built-in); only used in-process

    Returns:
        VerificationReport, identical for any worker count

    Raises:
        UnknownPredicateError: If an id is not registered
        GraphSizeError: If n is outside the generation range
        ValueError: If neither n nor graphs is supplied
    """
    registry = registry or _default_registry()
    ids = tuple(registry.resolve(list(predicate_ids)))
    if graphs is None:
        if n is None:
            raise ValueError("either n or a graph stream is required")
        graphs = generate_all(n, workers)
    started = time.perf_counter()
    report = VerificationReport(
        mode=mode, n=n, predicates={pid: PredicateSummary() for pid in ids}
    )

    jobs = ((ids, mode, batch) for batch in _batches(graphs))
    if workers <= 1:
        results = (
            [(code, registry.check_many(ids, graph6_decode(code), mode)) for code in job[2]]
            for job in jobs
        )
        _collect(report, results)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            _collect(report, pool.map(_evaluate_batch, jobs))

    for summary in report.predicates.values():
        finalize(summary)
    report.elapsed_seconds = time.perf_counter() - started
    logger.info(
        f"Verified {report.graphs_checked} graphs against {len(ids)} predicates: "
        f"{report.failure_count} failure(s) in {report.elapsed_seconds:.1f}s"
    )
    return report


def _collect(
    report: VerificationReport, results: Iterable[list[tuple[str, list[Verdict]]]]
) -> None:
    for batch in results:
        for code, verdicts in batch:
            report.graphs_checked += 1
            for verdict in verdicts:
                absorb(report.predicates[verdict.predicate_id], verdict, code)
                if verdict.status == VerdictStatus.FAILS:
                    logger.warning(f"{verdict.predicate_id} fails on {code}")
        if report.graphs_checked % (100 * _BATCH) < len(batch):
            logger.info(f"Checked {report.graphs_checked} graphs")
