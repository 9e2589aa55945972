"""Maximum matchings on general graphs."""

import logging

import networkx as nx

from ..core.graph_ops import induced_mask
from ..models import Graph, bits_of

logger = logging.getLogger(__name__)


def _greedy_matching(g: Graph) -> int:
    used = 0
    size = 0
    for u in range(g.n):
        if used >> u & 1:
            continue
        free = g.adj[u] & ~used
        if free:
            v = (free & -free).bit_length() - 1
            used |= (1 << u) | (1 << v)
            size += 1
    return size


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def max_matching(g: Graph) -> int:
    """Size of a maximum matching.

    A greedy matching that already reaches min(floor(n'/2), m) is returned
    directly (n' counts non-isolated vertices); otherwise the blossom algorithm of
    networkx settles the size.
    """
    if g.m == 0:
        return 0
    active = sum(1 for row in g.adj if row)
    upper = min(active // 2, g.m)
    greedy = _greedy_matching(g)
    if greedy == upper:
        return greedy
    matching = nx.max_weight_matching(to_networkx(g), maxcardinality=True)
    return len(matching)


def neighbourhood_matching(g: Graph, v: int) -> int:
    """Maximum matching size of G[N(v)]."""
    return max_matching(induced_mask(g, g.adj[v]))


def neighbourhood_edges(g: Graph, v: int) -> list[int]:
    """Degrees inside G[N(v)] of the neighbours of v."""
    mask = g.adj[v]
    return [(g.adj[u] & mask).bit_count() for u in bits_of(mask)]
