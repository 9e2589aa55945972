"""Bowtie (F_2) and friendship-graph (F_k) containment counts."""

import logging
from itertools import combinations
from math import comb

from ..models import Graph, bits_of
from .matching import neighbourhood_edges, neighbourhood_matching
from .triangles import triangles

logger = logging.getLogger(__name__)


def _bowties_at(g: Graph, v: int) -> int:
    inner = neighbourhood_edges(g, v)
    e_v = sum(inner) // 2
    return comb(e_v, 2) - sum(comb(d, 2) for d in inner)


def count_bowties(g: Graph) -> int:
    """Number of F_2 subgraphs.

    A bowtie centred at v is a pair of disjoint edges inside N(v), so the count is
    the sum over v of C(e_v, 2) minus the pairs of neighbourhood edges sharing a vertex.
    """
    return sum(_bowties_at(g, v) for v in range(g.n))


def count_bowties_bruteforce(g: Graph) -> int:
    """Count unordered pairs of triangles sharing exactly one vertex."""
    tris = [frozenset(t) for t in triangles(g)]
    return sum(1 for a, b in combinations(tris, 2) if len(a & b) == 1)


def contains_fk(g: Graph, k: int) -> bool:
    """Whether some vertex has a matching of size k inside its neighbourhood.

    Raises:
        ValueError: If k < 1
    """
    if k < 1:
        raise ValueError(f"F_k needs k >= 1, got {k}")
    for v in range(g.n):
        mask = g.adj[v]
        if k == 1:
            if any(g.adj[u] & mask for u in bits_of(mask)):
                return True
        elif k == 2:
            if _bowties_at(g, v) > 0:
                return True
        elif neighbourhood_matching(g, v) >= k:
            return True
    return False


def fk_number(g: Graph) -> int:
    """Largest k with F_k contained in g (0 when triangle-free)."""
    return max((neighbourhood_matching(g, v) for v in range(g.n)), default=0)
