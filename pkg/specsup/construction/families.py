"""Builders for the named graph families.

Embedded-bipartite graphs label side S as vertices 0..s-1 and side T as s..s+t-1.
The first index of K_{s,t}^{+...} is always the side holding the embedded edges.
"""

import logging
from collections.abc import Callable

from ..core.graph_ops import from_edges, from_rows
from ..exceptions import GraphConstructionError, GraphSizeError, UnknownFamilyError
from ..models import EmbeddedBipartiteSpec, Graph

logger = logging.getLogger(__name__)


def _check_pairs(pairs: list[tuple[int, int]], a: int, b: int, what: str, ordered: bool) -> None:
    seen = set()
    for u, v in pairs:
        if not (0 <= u < a and 0 <= v < b):
            raise GraphConstructionError(f"{what} pair ({u}, {v}) out of range")
        if not ordered and u == v:
            raise GraphConstructionError(f"{what} pair ({u}, {v}) is a loop")
        key = (u, v) if ordered else tuple(sorted((u, v)))
        if key in seen:
            raise GraphConstructionError(f"{what} pair ({u}, {v}) repeated")
        seen.add(key)


def build_embedded(spec: EmbeddedBipartiteSpec) -> Graph:
    """Build K_{s,t} minus spec.missing_cross plus the inside edges.

    Raises:
        GraphConstructionError: If labels are out of range, repeated or loops
    """
    s, t = spec.s, spec.t
    _check_pairs(spec.inside_s, s, s, "inside_s", ordered=False)
    _check_pairs(spec.inside_t, t, t, "inside_t", ordered=False)
    _check_pairs(spec.missing_cross, s, t, "missing_cross", ordered=True)

    t_block = ((1 << t) - 1) << s
    s_block = (1 << s) - 1
    rows = [t_block] * s + [s_block] * t
    for u, v in spec.missing_cross:
        rows[u] &= ~(1 << (s + v))
        rows[s + v] &= ~(1 << u)
    for u, v in spec.inside_s:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    for u, v in spec.inside_t:
        rows[s + u] |= 1 << (s + v)
        rows[s + v] |= 1 << (s + u)
    g = from_rows(rows)
    expected = s * t - len(spec.missing_cross) + len(spec.inside_s) + len(spec.inside_t)
    if g.m != expected:
        raise GraphConstructionError(f"edge count {g.m} differs from expected {expected}")
    return g


def turan_bipartite(n: int) -> Graph:
    """T_{n,2}: complete bipartite graph with parts ceil(n/2) and floor(n/2)."""
    if n < 1:
        raise GraphSizeError("T_{n,2} needs n >= 1")
    return build_embedded(EmbeddedBipartiteSpec(s=(n + 1) // 2, t=n // 2))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphSizeError("K_n needs n >= 1")
    full = (1 << n) - 1
    return from_rows([full ^ (1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    return from_rows([0] * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphSizeError("C_n needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    if k < 1:
        raise GraphSizeError("K_{1,k} needs k >= 1")
    return from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def friendship(k: int) -> Graph:
    """F_k: k triangles sharing vertex 0."""
    if k < 1:
        raise GraphSizeError("F_k needs k >= 1")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return from_edges(2 * k + 1, edges)


def _disjoint_edges(q: int) -> list[tuple[int, int]]:
    return [(2 * i, 2 * i + 1) for i in range(q)]


def kplus_spec(s: int, t: int) -> EmbeddedBipartiteSpec:
    if s < 2:
        raise GraphSizeError("K^+_{s,t} needs s >= 2")
    return EmbeddedBipartiteSpec(s=s, t=t, inside_s=_disjoint_edges(1))


def kplus2_spec(s: int, t: int) -> EmbeddedBipartiteSpec:
    if s < 4:
        raise GraphSizeError("K^{+2}_{s,t} needs s >= 4")
    return EmbeddedBipartiteSpec(s=s, t=t, inside_s=_disjoint_edges(2))


def kplus(n: int) -> Graph:
    """K^+_{floor(n/2), ceil(n/2)}: one edge inside the part of size floor(n/2)."""
    return build_embedded(kplus_spec(n // 2, (n + 1) // 2))


def kplus2(n: int) -> Graph:
    """K^{+2}_{ceil(n/2), floor(n/2)}: two disjoint edges inside the larger part."""
    return build_embedded(kplus2_spec((n + 1) // 2, n // 2))


def kplus2_st(s: int, t: int) -> Graph:
    return build_embedded(kplus2_spec(s, t))


def kplusplus_spec(s: int, t: int, reading: str = "one-per-side") -> EmbeddedBipartiteSpec:
    """K^{++}_{s,t}: one edge in each part, or a two-edge path in S."""
    if reading == "one-per-side":
        if s < 2 or t < 2:
            raise GraphSizeError("K^{++}_{s,t} needs s, t >= 2")
        return EmbeddedBipartiteSpec(s=s, t=t, inside_s=[(0, 1)], inside_t=[(0, 1)])
    if reading == "path":
        if s < 3:
            raise GraphSizeError("path reading of K^{++}_{s,t} needs s >= 3")
        return EmbeddedBipartiteSpec(s=s, t=t, inside_s=[(0, 1), (1, 2)])
    raise GraphConstructionError(f"unknown K^{{++}} reading {reading!r}")


def kplusplus(s: int, t: int, reading: str = "one-per-side") -> Graph:
    return build_embedded(kplusplus_spec(s, t, reading))


def kab_plus2(b: int) -> Graph:
    """K_{a,b}^{+2} with a = 4b + 3, the tightness example for sqrt(m) - O(1) triangles."""
    if b < 1:
        raise GraphSizeError("K_{a,b}^{+2} needs b >= 1")
    return kplus2_st(4 * b + 3, b)


def y_n2q(n: int, q: int) -> Graph:
    """Y_{n,2,q}: T_{n,2} with q disjoint edges embedded in the larger part."""
    s = (n + 1) // 2
    if q < 0 or 2 * q > s:
        raise GraphSizeError(f"Y_{{n,2,q}} needs 0 <= 2q <= ceil(n/2), got q={q}, n={n}")
    return build_embedded(EmbeddedBipartiteSpec(s=s, t=n // 2, inside_s=_disjoint_edges(q)))


def kplus_bar(n: int) -> Graph:
    """Odd n: K_{(n-1)/2,(n+1)/2} plus an edge in the smaller part minus an incident cross edge.

    It has exactly e(T_{n,2}) edges.
    """
    if n % 2 == 0 or n < 5:
        raise GraphSizeError("K^{+|} is defined for odd n >= 5")
    return build_embedded(
        EmbeddedBipartiteSpec(s=(n - 1) // 2, t=(n + 1) // 2, inside_s=[(0, 1)], missing_cross=[(0, 0)])
    )


def kplus2_bar(n: int) -> Graph:
    """Odd n: K^{+2}_{(n-1)/2,(n+1)/2} minus a cross edge at an endpoint of an embedded edge."""
    if n % 2 == 0 or n < 9:
        raise GraphSizeError("K^{+2|} is defined for odd n >= 9")
    spec = kplus2_spec((n - 1) // 2, (n + 1) // 2)
    return build_embedded(spec.model_copy(update={"missing_cross": [(0, 0)]}))


def g1_spec(s: int, t: int) -> EmbeddedBipartiteSpec:
    """Two edges u1u2, u3u4 in S, one edge v1v2 in T; v1 sees u1, u3 and v2 sees u2, u4."""
    if s < 4 or t < 2:
        raise GraphSizeError("G_1 needs s >= 4 and t >= 2")
    return EmbeddedBipartiteSpec(
        s=s, t=t, inside_s=_disjoint_edges(2), inside_t=[(0, 1)],
        missing_cross=[(1, 0), (3, 0), (0, 1), (2, 1)],
    )


def h1_spec(s: int, t: int) -> EmbeddedBipartiteSpec:
    """Edge u1u2 in S, edge v1v2 in T; v1 sees both u's, v2 sees neither."""
    if s < 2 or t < 2:
        raise GraphSizeError("H_1 needs s, t >= 2")
    return EmbeddedBipartiteSpec(
        s=s, t=t, inside_s=[(0, 1)], inside_t=[(0, 1)], missing_cross=[(0, 1), (1, 1)]
    )


def h2_spec(s: int, t: int) -> EmbeddedBipartiteSpec:
    """Edge u1u2 in S, edge v1v2 in T; v1 sees only u1, v2 sees only u2."""
    if s < 2 or t < 2:
        raise GraphSizeError("H_2 needs s, t >= 2")
    return EmbeddedBipartiteSpec(
        s=s, t=t, inside_s=[(0, 1)], inside_t=[(0, 1)], missing_cross=[(1, 0), (0, 1)]
    )


FamilyBuilder = Callable[..., list[Graph]]


def _halves(n: int, s: int | None, t: int | None) -> tuple[int, int]:
    return (s if s is not None else (n + 1) // 2, t if t is not None else n // 2)


def _family_table() -> dict[str, FamilyBuilder]:
    from .deletions import n_minus_3_extremal_family

    return {
        "turan": lambda n, **_: [turan_bipartite(n)],
        "complete": lambda n, **_: [complete(n)],
        "cycle": lambda n, **_: [cycle(n)],
        "star": lambda n, **_: [star(n - 1)],
        "friendship": lambda n, q=None, **_: [friendship(q if q is not None else (n - 1) // 2)],
        "kplus": lambda n, s=None, t=None, **_: (
            [build_embedded(kplus_spec(s, t))] if s is not None and t is not None else [kplus(n)]
        ),
        "kplus2": lambda n, s=None, t=None, **_: (
            [kplus2_st(s, t)] if s is not None and t is not None else [kplus2(n)]
        ),
        "kplusplus": lambda n, s=None, t=None, **_: [kplusplus(*_halves(n, s, t))],
        "kab-plus2": lambda n, b=None, **_: [kab_plus2(b if b is not None else max(1, (n - 3) // 5))],
        "ynq": lambda n, q=None, **_: [y_n2q(n, q if q is not None else 2)],
        "kplus-bar": lambda n, **_: [kplus_bar(n)],
        "kplus2-bar": lambda n, **_: [kplus2_bar(n)],
        "g1": lambda n, s=None, t=None, **_: [build_embedded(g1_spec(*_halves(n, s, t)))],
        "h1": lambda n, s=None, t=None, **_: [build_embedded(h1_spec(*_halves(n, s, t)))],
        "h2": lambda n, s=None, t=None, **_: [build_embedded(h2_spec(*_halves(n, s, t)))],
        "n-minus-3": lambda n, **_: n_minus_3_extremal_family(n),
    }


def family_names() -> list[str]:
    return sorted(_family_table())


def build_family(name: str, n: int, **params: int | None) -> list[Graph]:
    """Build the instances of a registered family at vertex count n.

    Args:
        name: Family name (see family_names())
        n: Vertex count
        **params: Optional s, t, q, b overrides

    Returns:
        One or more graphs

    Raises:
        UnknownFamilyError: If name is not registered
    """
    table = _family_table()
    if name not in table:
        raise UnknownFamilyError(f"unknown family {name!r}; known: {', '.join(sorted(table))}")
    graphs = table[name](n, **params)
    logger.debug(f"Built family {name} at n={n}: {len(graphs)} graph(s)")
    return graphs
