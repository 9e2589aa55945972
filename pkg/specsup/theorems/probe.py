"""Structural probe of graphs near the bowtie spectral extremum.

Given a graph, take a maximum cut S, T (exact up to 28 vertices, local search
beyond), compute the low-degree set L and the heavy set W, and record the
structural statements that hold for large spectral extremal graphs. Nothing
here is asserted: the statements are only known for very large n.
"""

import logging

from ..config import EXACT_MAXCUT_LIMIT
from ..core.bipartition import bad_sets, max_cut, vertices_of
from ..core.graph_ops import induced_subgraph
from ..counting.bowties import count_bowties
from ..counting.matching import max_matching
from ..enumeration.graph6 import graph6_encode
from ..models import Graph, ProbeReport
from ..spectral.power_iteration import spectral_radius
from .context import GraphContext, kplus2_reference

logger = logging.getLogger(__name__)


def _greedy_independent(g: Graph, vertices: list[int]) -> list[int]:
    chosen: list[int] = []
    blocked = 0
    for v in vertices:
        if not blocked >> v & 1:
            chosen.append(v)
            blocked |= g.adj[v] | 1 << v
    return chosen


def _side_rest_checks(g: Graph, rest: list[int], label: str) -> dict[str, bool]:
    h = induced_subgraph(g, rest)
    max_degree = max((row.bit_count() for row in h.adj), default=0)
    return {
        f"{label}_minus_l_3k2_free": max_matching(h) <= 2,
        f"{label}_minus_l_k12_free": max_degree <= 1,
    }


def probe(g: Graph, seed: int = 0) -> ProbeReport:
    """Run the structural probe on one graph.

    Args:
        g: Graph to probe
        seed: Seed for the heuristic cut when n exceeds the exact limit

    Returns:
        ProbeReport with the cut, the bad sets and a map of structural checks
    """
    n = g.n
    mode = "exact" if n <= EXACT_MAXCUT_LIMIT else "heuristic"
    cut = max_cut(g, mode, seed=seed)
    p = cut.witness
    low, heavy = bad_sets(g, p)

    result = spectral_radius(g)
    x = list(result.perron)
    top = max(range(n), key=lambda v: (x[v], -v)) if n else 0
    scale = x[top] if n and x[top] > 0 else 1.0
    other = 1 - p.side[top] if n else 1
    independent = _greedy_independent(g, [v for v in vertices_of(p, other) if v not in low])
    mass = sum(x[v] for v in independent) / scale

    above: bool | None = None
    if n >= 7:
        comparison = GraphContext(g).compare(kplus2_reference(n))
        above = None if comparison.sign is None else comparison.sign >= 0

    inside = p.e_s + p.e_t
    checks = {
        "l_below_n_over_403": 403 * len(low) < n,
        "w_below_32400": len(heavy) < 32400,
        "w_subset_l": heavy <= low,
        "inside_at_most_3": inside <= 3,
        "inside_equals_2": inside == 2,
        "one_side_has_2": p.e_s == 2 or p.e_t == 2,
        "perron_mass": 201 * 2 * mass > n * 199,
    }
    checks.update(_side_rest_checks(g, [v for v in vertices_of(p, 0) if v not in low], "s"))
    checks.update(_side_rest_checks(g, [v for v in vertices_of(p, 1) if v not in low], "t"))
    logger.debug(f"Probe n={n}: D={cut.value}, |L|={len(low)}, |W|={len(heavy)}")

    return ProbeReport(
        graph6=graph6_encode(g),
        n=n,
        m=g.m,
        lam=result.radius,
        above_kplus2=above,
        bowties=count_bowties(g),
        distance=cut.value,
        exact_cut=cut.exact,
        s_size=p.s_size,
        t_size=p.t_size,
        e_s=p.e_s,
        e_t=p.e_t,
        low=sorted(low),
        heavy=sorted(heavy),
        perron_mass=mass,
        checks=checks,
    )
