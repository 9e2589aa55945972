"""Simulated annealing for the spectral radius under hard substructure constraints."""

import logging
import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np
from pydantic import BaseModel, Field

from ..config import SEARCH_TOLERANCE
from ..construction.families import build_family, family_names
from ..core.graph_ops import toggle_edge
from ..enumeration.canonical import are_isomorphic, canonical_form
from ..enumeration.graph6 import graph6_encode
from ..exceptions import InfeasibleSearchError, SpecsupError
from ..models import Graph, SearchConfig, SearchResult, TrajectorySummary
from ..spectral.power_iteration import lambda_of
from .constraints import counter_values, satisfied, starting_graph

logger = logging.getLogger(__name__)


class RestartOutcome(BaseModel):
    """Best graph of one restart and its move counters."""

    best: Graph = Field(..., description="Best graph of the restart")
    best_lambda: float = Field(..., description="Its spectral radius")
    accepted: int = Field(default=0, description="Accepted moves")
    rejected_constraint: int = Field(default=0, description="Constraint rejections")
    rejected_metropolis: int = Field(default=0, description="Metropolis rejections")
    improvements: int = Field(default=0, description="Improvements of the best graph")


def _propose(g: Graph, rng: np.random.Generator, moves: str) -> Graph | None:
    n = g.n
    if n < 2:
        return None
    if moves == "single-flip":
        u, v = (int(i) for i in rng.choice(n, size=2, replace=False))
        return toggle_edge(g, u, v)
    edges = g.edges()
    total = n * (n - 1) // 2
    if not edges or len(edges) == total:
        return None
    u, v = edges[int(rng.integers(len(edges)))]
    while True:
        a, b = (int(i) for i in rng.choice(n, size=2, replace=False))
        if not g.has_edge(a, b):
            break
    return toggle_edge(toggle_edge(g, u, v), a, b)


def run_restart(cfg: SearchConfig, seed: np.random.SeedSequence) -> RestartOutcome:
    """One annealing chain from the feasible starting graph."""
    rng = np.random.default_rng(seed)
    current = starting_graph(cfg.n, cfg.constraints)
    current_lambda = lambda_of(current, SEARCH_TOLERANCE)
    outcome = RestartOutcome(best=current, best_lambda=current_lambda)
    temperature = cfg.schedule.initial_temperature
    for _ in range(cfg.schedule.steps):
        candidate = _propose(current, rng, cfg.moves)
        temperature *= cfg.schedule.cooling
        if candidate is None:
            continue
        if not satisfied(counter_values(candidate, cfg.constraints), cfg.constraints):
            outcome.rejected_constraint += 1
            continue
        candidate_lambda = lambda_of(candidate, SEARCH_TOLERANCE)
        delta = candidate_lambda - current_lambda
        if delta < 0 and (temperature <= 0 or rng.random() >= math.exp(delta / temperature)):
            outcome.rejected_metropolis += 1
            continue
        current, current_lambda = candidate, candidate_lambda
        outcome.accepted += 1
        if current_lambda > outcome.best_lambda:
            outcome.best, outcome.best_lambda = current, current_lambda
            outcome.improvements += 1
    return outcome


def _run_job(job: tuple[SearchConfig, np.random.SeedSequence]) -> RestartOutcome:
    return run_restart(*job)


def match_family(g: Graph) -> str | None:
    """Name of the first registered family (default parameters) with an instance isomorphic to g."""
    for name in family_names():
        try:
            instances = build_family(name, g.n)
        except SpecsupError:
            continue
        if any(are_isomorphic(g, h) for h in instances):
            return name
    return None


def anneal(cfg: SearchConfig) -> SearchResult:
    """Maximise lambda over graphs satisfying cfg.constraints.

    Args:
        cfg: Search configuration

    Returns:
        SearchResult; identical for identical configs

    Raises:
        InfeasibleSearchError: If no feasible starting graph exists, or the best
            graph fails a constraint under the brute-force counters
    """
    seeds = np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    jobs = [(cfg, s) for s in seeds]
    if cfg.workers > 1 and cfg.restarts > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            outcomes = list(pool.map(_run_job, jobs))
    else:
        outcomes = [_run_job(job) for job in jobs]
    for i, o in enumerate(outcomes):
        logger.info(f"Restart {i + 1}/{cfg.restarts}: best lambda {o.best_lambda:.10g}")

    winner = min(outcomes, key=lambda o: (-o.best_lambda, canonical_form(o.best).sort_key()))
    values = counter_values(winner.best, cfg.constraints, oracle=True)
    if not satisfied(values, cfg.constraints):
        raise InfeasibleSearchError(f"best graph violates constraints under brute force: {values}")

    trajectory = TrajectorySummary(
        accepted=sum(o.accepted for o in outcomes),
        rejected_constraint=sum(o.rejected_constraint for o in outcomes),
        rejected_metropolis=sum(o.rejected_metropolis for o in outcomes),
        improvements=sum(o.improvements for o in outcomes),
        restart_best=[o.best_lambda for o in outcomes],
    )
    matched = match_family(winner.best)
    if matched:
        logger.info(f"Best graph is the {matched} construction")
    return SearchResult(
        best=winner.best,
        best_graph6=graph6_encode(winner.best),
        best_lambda=winner.best_lambda,
        constraint_values=values,
        trajectory=trajectory,
        matched_family=matched,
    )
