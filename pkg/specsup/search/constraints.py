"""Substructure counters used as hard search constraints, and feasible starting graphs."""

import logging
from collections.abc import Callable, Sequence

from ..construction.families import empty, turan_bipartite
from ..core.graph_ops import from_edges
from ..counting.bowties import count_bowties, count_bowties_bruteforce
from ..counting.cover import triangle_cover_number
from ..counting.triangles import (
    booksize,
    booksize_bruteforce,
    count_triangles_bruteforce,
    triangle_count,
    triangular_edge_count,
)
from ..exceptions import InfeasibleSearchError
from ..models import Constraint, Graph

logger = logging.getLogger(__name__)

Counter = Callable[[Graph], int]

COUNTERS: dict[str, Counter] = {
    "bowties": count_bowties,
    "triangles": triangle_count,
    "edges": lambda g: g.m,
    "booksize": booksize,
    "tau3": triangle_cover_number,
    "triangular-edges": triangular_edge_count,
}

ORACLES: dict[str, Counter] = {
    **COUNTERS,
    "bowties": count_bowties_bruteforce,
    "triangles": count_triangles_bruteforce,
    "booksize": booksize_bruteforce,
}


def counter_values(
    g: Graph, constraints: Sequence[Constraint], oracle: bool = False
) -> dict[str, int]:
    """Values of the constrained counters on g."""
    table = ORACLES if oracle else COUNTERS
    return {c.counter: table[c.counter](g) for c in constraints}


def satisfied(values: dict[str, int], constraints: Sequence[Constraint]) -> bool:
    for c in constraints:
        value = values[c.counter]
        if c.op == "le" and value > c.bound:
            return False
        if c.op == "eq" and value != c.bound:
            return False
    return True


def _with_edge_count(n: int, m: int) -> Graph | None:
    """A graph with exactly m edges: a subgraph of T_{n,2}, or T_{n,2} plus edges inside its larger part."""
    base = turan_bipartite(n).edges()
    if m <= len(base):
        return from_edges(n, base[:m])
    larger = (n + 1) // 2
    inside = [(u, v) for u in range(larger) for v in range(u + 1, larger)]
    # disjoint pairs first
    inside.sort(key=lambda e: (not (e[0] % 2 == 0 and e[1] == e[0] + 1), e))
    extra = m - len(base)
    if extra > len(inside):
        return None
    return from_edges(n, base + inside[:extra])


def starting_graph(n: int, constraints: Sequence[Constraint]) -> Graph:
    """First constraint-satisfying graph among a few bipartite-based candidates.

    Raises:
        InfeasibleSearchError: If no candidate satisfies every constraint
    """
    fixed = [c.bound for c in constraints if c.counter == "edges" and c.op == "eq"]
    candidates: list[Graph] = []
    if fixed:
        g = _with_edge_count(n, fixed[0])
        if g is not None:
            candidates.append(g)
    else:
        candidates += [turan_bipartite(n), empty(n)]
    for g in candidates:
        if satisfied(counter_values(g, constraints), constraints):
            logger.debug(f"Starting graph with m={g.m}")
            return g
    raise InfeasibleSearchError(
        f"no starting graph on {n} vertices satisfies "
        + ", ".join(f"{c.counter} {c.op} {c.bound}" for c in constraints)
    )
