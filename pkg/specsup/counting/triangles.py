"""Triangle statistics via bit-row intersections."""

import logging
from itertools import combinations

from ..models import Graph, TriangleStats, bits_of

logger = logging.getLogger(__name__)


def triangle_stats(g: Graph) -> TriangleStats:
    """Count triangles in total, through every vertex and on every edge.

    Returns:
        TriangleStats where per_edge[(u, v)] = |N(u) & N(v)| for each edge u < v
    """
    per_edge: dict[tuple[int, int], int] = {}
    per_vertex = [0] * g.n
    edge_sum = 0
    for u in range(g.n):
        row = g.adj[u]
        for v in bits_of(row >> (u + 1) << (u + 1)):
            common = (row & g.adj[v]).bit_count()
            per_edge[(u, v)] = common
            per_vertex[u] += common
            per_vertex[v] += common
            edge_sum += common
    # each triangle is seen on its three edges, each vertex on two of them
    return TriangleStats.model_construct(
        total=edge_sum // 3,
        per_vertex=tuple(c // 2 for c in per_vertex),
        per_edge=per_edge,
    )


def triangle_count(g: Graph) -> int:
    return triangle_stats(g).total


def booksize(g: Graph) -> int:
    """Largest number of triangles sharing one edge; 0 when triangle-free."""
    best = 0
    for u in range(g.n):
        row = g.adj[u]
        for v in bits_of(row >> (u + 1) << (u + 1)):
            best = max(best, (row & g.adj[v]).bit_count())
    return best


def triangular_edge_count(g: Graph) -> int:
    """Number of edges lying in at least one triangle."""
    return sum(1 for c in triangle_stats(g).per_edge.values() if c > 0)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles (u, v, w) with u < v < w."""
    out = []
    for u in range(g.n):
        above_u = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits_of(above_u):
            for w in bits_of(above_u & g.adj[v] >> (v + 1) << (v + 1)):
                out.append((u, v, w))
    return out


def count_triangles_bruteforce(g: Graph) -> int:
    return sum(
        1
        for u, v, w in combinations(range(g.n), 3)
        if g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)
    )


def booksize_bruteforce(g: Graph) -> int:
    best = 0
    for u, v in g.edges():
        best = max(best, sum(1 for w in range(g.n) if g.has_edge(u, w) and g.has_edge(v, w)))
    return best
