"""Graph construction, copy-based mutation and structural helpers."""

import logging
from collections import deque
from collections.abc import Iterable, Sequence

import numpy as np

from ..exceptions import GraphConstructionError
from ..models import Bipartition, Graph, bits_of

logger = logging.getLogger(__name__)


def from_rows(rows: Sequence[int]) -> Graph:
    """Build a Graph from trusted symmetric bit rows without re-validation."""
    rows = tuple(rows)
    m = sum(r.bit_count() for r in rows) // 2
    return Graph.model_construct(n=len(rows), adj=rows, m=m)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, de-duplicating repeated pairs.

    Args:
        n: Vertex count
        edges: Vertex pairs

    Returns:
        Graph on vertices 0..n-1

    Raises:
        GraphConstructionError: If an endpoint is out of range or a pair is a loop
    """
    if n < 0:
        raise GraphConstructionError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphConstructionError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return from_rows(rows)


def toggle_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a copy of g with the pair uv flipped.

    Raises:
        GraphConstructionError: If u == v or either vertex is out of range
    """
    if u == v:
        raise GraphConstructionError(f"cannot toggle loop at {u}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphConstructionError(f"pair ({u}, {v}) outside 0..{g.n - 1}")
    rows = list(g.adj)
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u
    m = g.m - 1 if g.adj[u] >> v & 1 else g.m + 1
    return Graph.model_construct(n=g.n, adj=tuple(rows), m=m)


def make_bipartition(g: Graph, side: Sequence[int]) -> Bipartition:
    """Build a Bipartition of g with cached counts from a 0/1 colouring."""
    s_mask = sum(1 << v for v, c in enumerate(side) if c == 0)
    t_mask = ((1 << g.n) - 1) ^ s_mask
    e_s = sum((g.adj[v] & s_mask).bit_count() for v in bits_of(s_mask)) // 2
    e_t = sum((g.adj[v] & t_mask).bit_count() for v in bits_of(t_mask)) // 2
    return Bipartition(side=tuple(side), e_s=e_s, e_t=e_t, e_st=g.m - e_s - e_t)


def is_bipartite(g: Graph) -> Bipartition | None:
    """Find a proper 2-colouring by breadth-first search.

    Returns:
        Bipartition with e_s = e_t = 0, or None when g has an odd cycle
    """
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in bits_of(g.adj[u]):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    return Bipartition(side=tuple(colour), e_s=0, e_t=0, e_st=g.m)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return from_rows([(full ^ row) & ~(1 << u) for u, row in enumerate(g.adj)])


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on vertices, relabelled 0..k-1 in the given order."""
    position = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        row = 0
        for w in bits_of(g.adj[v]):
            if w in position:
                row |= 1 << position[w]
        rows.append(row)
    return from_rows(rows)


def induced_mask(g: Graph, mask: int) -> Graph:
    """Subgraph induced on the vertex bitmask, vertices kept in increasing order."""
    return induced_subgraph(g, bits_of(mask))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Relabel so that new vertex i is old vertex order[i]."""
    if sorted(order) != list(range(g.n)):
        raise GraphConstructionError("relabelling must be a permutation of the vertices")
    return induced_subgraph(g, order)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.adj)
        offset += h.n
    return from_rows(rows)


def degrees(g: Graph) -> list[int]:
    return [row.bit_count() for row in g.adj]


def adjacency_array(g: Graph) -> np.ndarray:
    """Dense 0/1 float adjacency matrix."""
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for u, row in enumerate(g.adj):
        for v in bits_of(row):
            a[u, v] = 1.0
    return a


def is_complete_bipartite(g: Graph, allow_isolated: bool = True) -> bool:
    """Whether the (non-isolated part of the) graph is a complete bipartite graph.

    The edgeless graph counts as complete bipartite with isolated vertices.

    Args:
        g: Graph to test
        allow_isolated: Permit isolated vertices outside the complete bipartite part
    """
    active = [v for v in range(g.n) if g.adj[v]]
    if len(active) < g.n and not allow_isolated:
        # K_{n,0} is the only complete bipartite graph with isolated vertices
        return g.m == 0
    if not active:
        return True
    part = is_bipartite(induced_subgraph(g, active))
    if part is None:
        return False
    a = part.s_size
    b = part.t_size
    return g.m == a * b
