"""Max-cut, bipartite distance D(G) and the low-degree / high-inside-degree vertex sets."""

import logging
from typing import Literal

import numpy as np

from ..config import EXACT_MAXCUT_LIMIT
from ..exceptions import GraphSizeError
from ..models import BipartiteDistance, Bipartition, Graph, bits_of
from .graph_ops import make_bipartition

logger = logging.getLogger(__name__)

_CHUNK = 1 << 20


def max_cut(
    g: Graph,
    mode: Literal["exact", "heuristic"] = "exact",
    seed: int = 0,
    restarts: int = 20,
) -> BipartiteDistance:
    """Compute D(G) = m - maxcut(G).

    Args:
        g: Graph
        mode: "exact" sweeps all 2^(n-1) bipartitions; "heuristic" runs local search
        seed: RNG seed for heuristic starts
        restarts: Number of random starts in heuristic mode

    Returns:
        BipartiteDistance; exact=False means value is only an upper bound

    Raises:
        GraphSizeError: If exact mode is requested for n > 28
    """
    if mode == "exact":
        if g.n > EXACT_MAXCUT_LIMIT:
            raise GraphSizeError(
                f"exact max-cut supports n <= {EXACT_MAXCUT_LIMIT}, got n={g.n}"
            )
        return _exact_max_cut(g)
    return _heuristic_max_cut(g, seed, restarts)


def _exact_max_cut(g: Graph) -> BipartiteDistance:
    n = g.n
    if n <= 1 or g.m == 0:
        witness = make_bipartition(g, [0] * n)
        return BipartiteDistance(value=g.m - witness.e_st, exact=True, witness=witness)

    # vertex n-1 stays in T; bit v of a mask puts v in S
    full = np.uint64((1 << n) - 1)
    rows = [np.uint64(r) for r in g.adj]
    total = 1 << (n - 1)
    best_cut = -1
    best_mask = 0
    for start in range(0, total, _CHUNK):
        masks = np.arange(start, min(start + _CHUNK, total), dtype=np.uint64)
        outside = ~masks & full
        cut = np.zeros(masks.shape[0], dtype=np.int64)
        for v in range(n - 1):
            if not g.adj[v]:
                continue
            in_s = ((masks >> np.uint64(v)) & np.uint64(1)).astype(np.int64)
            cut += in_s * np.bitwise_count(rows[v] & outside).astype(np.int64)
        i = int(np.argmax(cut))
        if int(cut[i]) > best_cut:
            best_cut = int(cut[i])
            best_mask = start + i
    side = [0 if best_mask >> v & 1 else 1 for v in range(n)]
    witness = make_bipartition(g, side)
    logger.debug(f"Exact max-cut n={n}: cut={best_cut}, D={g.m - best_cut}")
    return BipartiteDistance(value=g.m - best_cut, exact=True, witness=witness)


def _heuristic_max_cut(g: Graph, seed: int, restarts: int) -> BipartiteDistance:
    n = g.n
    rng = np.random.default_rng(seed)
    best_side: list[int] = [0] * n
    best_inside = g.m
    for _ in range(max(1, restarts)):
        side = [int(c) for c in rng.integers(0, 2, size=n)]
        improved = True
        while improved:
            improved = False
            s_mask = sum(1 << v for v in range(n) if side[v] == 0)
            for v in range(n):
                own = s_mask if side[v] == 0 else ~s_mask
                same = (g.adj[v] & own).bit_count()
                other = g.adj[v].bit_count() - same
                if same > other:
                    side[v] ^= 1
                    s_mask ^= 1 << v
                    improved = True
        inside = make_bipartition(g, side)
        value = inside.e_s + inside.e_t
        if value < best_inside:
            best_inside = value
            best_side = side
    witness = make_bipartition(g, best_side)
    return BipartiteDistance(value=witness.e_s + witness.e_t, exact=False, witness=witness)


def bad_sets(g: Graph, p: Bipartition) -> tuple[set[int], set[int]]:
    """Low-degree vertices L and high inside-degree vertices W.

    L = {v : d(v) <= (1/2 - 1/200) n};
    W = {v in S : d_S(v) >= n/150} union {v in T : d_T(v) >= n/150}.
    Comparisons are done on integers scaled by the denominators.
    """
    n = g.n
    s_mask = p.s_mask
    t_mask = p.t_mask
    low = {v for v in range(n) if 200 * g.adj[v].bit_count() <= 99 * n}
    heavy = set()
    for v in range(n):
        own = s_mask if p.side[v] == 0 else t_mask
        if 150 * (g.adj[v] & own).bit_count() >= n:
            heavy.add(v)
    return low, heavy


def inside_degree(g: Graph, p: Bipartition, v: int) -> int:
    own = p.s_mask if p.side[v] == 0 else p.t_mask
    return (g.adj[v] & own).bit_count()


def vertices_of(p: Bipartition, side: int) -> list[int]:
    return bits_of(p.s_mask if side == 0 else p.t_mask)
