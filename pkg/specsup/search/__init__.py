"""Constrained simulated-annealing search for spectral extremal graphs."""

from .annealer import anneal, match_family, run_restart
from .constraints import COUNTERS, counter_values, satisfied, starting_graph

__all__ = [
    "anneal",
    "match_family",
    "run_restart",
    "COUNTERS",
    "counter_values",
    "satisfied",
    "starting_graph",
]
