"""Exact triangle covering number by branch and bound."""

import logging

from ..config import TAU3_TRIANGLE_LIMIT
from ..exceptions import GraphSizeError
from ..models import Graph, bits_of
from .triangles import triangles

logger = logging.getLogger(__name__)


def _packing_bound(tris: list[int]) -> int:
    used = 0
    count = 0
    for t in tris:
        if not t & used:
            used |= t
            count += 1
    return count


def _greedy_cover(tris: list[int], n: int) -> int:
    remaining = tris
    size = 0
    while remaining:
        hits = [0] * n
        for t in remaining:
            for v in bits_of(t):
                hits[v] += 1
        v = max(range(n), key=hits.__getitem__)
        remaining = [t for t in remaining if not t >> v & 1]
        size += 1
    return size


def triangle_cover_number(g: Graph) -> int:
    """tau_3(G): minimum number of vertices meeting every triangle.

    Greedy covering gives the initial upper bound; a greedy vertex-disjoint
    triangle packing of the still uncovered triangles is the lower bound.

    Raises:
        GraphSizeError: If g has more than 10^5 triangles
    """
    tris = [(1 << u) | (1 << v) | (1 << w) for u, v, w in triangles(g)]
    if len(tris) > TAU3_TRIANGLE_LIMIT:
        raise GraphSizeError(f"{len(tris)} triangles exceed the tau_3 limit {TAU3_TRIANGLE_LIMIT}")
    if not tris:
        return 0
    best = _greedy_cover(tris, g.n)
    stack: list[tuple[list[int], int]] = [(tris, 0)]
    while stack:
        uncovered, chosen = stack.pop()
        if not uncovered:
            best = min(best, chosen)
            continue
        if chosen + _packing_bound(uncovered) >= best:
            continue
        for v in bits_of(uncovered[0]):
            stack.append(([t for t in uncovered if not t >> v & 1], chosen + 1))
    return best
