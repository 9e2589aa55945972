"""Isomorphism classes of cross-edge deletions from embedded bipartite graphs.

Deletions are added one at a time. Vertices not touched by an embedded edge or a
previous deletion are twins of each other, so only one untouched vertex per side is
tried. Results at every step are de-duplicated by canonical form.
"""

import logging
import math
from collections.abc import Callable

from ..config import COMPARISON_MARGIN
from ..core.graph_ops import toggle_edge
from ..counting.triangles import triangle_stats
from ..enumeration.canonical import canonical_form
from ..exceptions import GraphConstructionError
from ..models import CanonicalForm, EmbeddedBipartiteSpec, Graph
from ..spectral.power_iteration import spectral_radius
from .families import build_embedded, kplus2_spec, kplus2_st, kplusplus_spec

logger = logging.getLogger(__name__)

# candidate(spec, s_label, t_label) decides whether a cross edge may be deleted
EdgeFilter = Callable[[EmbeddedBipartiteSpec, int, int], bool]
# accept(graph, deleted pairs as (s_label, t_label)) keeps a finished class
ClassFilter = Callable[[Graph, frozenset[tuple[int, int]]], bool]


def any_cross_edge(spec: EmbeddedBipartiteSpec, u: int, v: int) -> bool:
    return True


def useful_cross_edge(spec: EmbeddedBipartiteSpec, u: int, v: int) -> bool:
    """Cross edges at an endpoint of an embedded edge, the only ones lying in triangles."""
    return any(u in pair for pair in spec.inside_s) or any(v in pair for pair in spec.inside_t)


def at_s_vertex(label: int) -> EdgeFilter:
    def _filter(spec: EmbeddedBipartiteSpec, u: int, v: int) -> bool:
        return u == label

    return _filter


def _touched(spec: EmbeddedBipartiteSpec, deleted: frozenset[tuple[int, int]]) -> tuple[set[int], set[int]]:
    removed = deleted | set(spec.missing_cross)
    s_touched = {x for pair in spec.inside_s for x in pair} | {u for u, _ in removed}
    t_touched = {x for pair in spec.inside_t for x in pair} | {v for _, v in removed}
    return s_touched, t_touched


def figure_deletion_family(
    base: EmbeddedBipartiteSpec,
    k: int,
    candidate: EdgeFilter = any_cross_edge,
    accept: ClassFilter | None = None,
) -> list[Graph]:
    """One representative per isomorphism class of base minus k cross edges.

    Args:
        base: Embedded bipartite spec to delete from
        k: Number of cross edges to delete
        candidate: Restricts which cross edges may be deleted
        accept: Keeps only the classes it returns True for

    Returns:
        Representatives ordered by their sorted deletion pattern, which does not
        depend on the part sizes once they are large enough

    Raises:
        GraphConstructionError: If k is negative or exceeds the cross-edge count
    """
    g0 = build_embedded(base)
    present = base.s * base.t - len(base.missing_cross)
    if k < 0 or k > present:
        raise GraphConstructionError(f"cannot delete {k} of {present} cross edges")
    missing = set(base.missing_cross)
    level: dict[CanonicalForm, tuple[Graph, frozenset[tuple[int, int]]]] = {
        canonical_form(g0): (g0, frozenset())
    }
    for step in range(k):
        following: dict[CanonicalForm, tuple[Graph, frozenset[tuple[int, int]]]] = {}
        for g, deleted in level.values():
            s_touched, t_touched = _touched(base, deleted)
            s_free = [u for u in range(base.s) if u not in s_touched]
            t_free = [v for v in range(base.t) if v not in t_touched]
            s_choices = sorted(s_touched) + s_free[:1]
            t_choices = sorted(t_touched) + t_free[:1]
            for u in s_choices:
                for v in t_choices:
                    if (u, v) in deleted or (u, v) in missing or not candidate(base, u, v):
                        continue
                    h = toggle_edge(g, u, base.s + v)
                    key = canonical_form(h)
                    if key not in following:
                        following[key] = (h, deleted | {(u, v)})
        level = following
        logger.debug(f"Deletion step {step + 1}/{k}: {len(level)} classes")
    kept = [
        (sorted(deleted), g) for g, deleted in level.values() if accept is None or accept(g, deleted)
    ]
    kept.sort(key=lambda item: item[0])
    logger.info(f"Deletion family s={base.s}, t={base.t}, k={k}: {len(kept)} classes")
    return [g for _, g in kept]


def _triangle_total(g: Graph) -> int:
    return triangle_stats(g).total


def destroys_exactly(triangles_before: int, count: int) -> ClassFilter:
    def _accept(g: Graph, deleted: frozenset[tuple[int, int]]) -> bool:
        return _triangle_total(g) == triangles_before - count

    return _accept


def n_minus_3_extremal_family(n: int) -> list[Graph]:
    """Graphs with e(T_{n,2}) edges, tau_3 >= 2, exactly n-3 triangles and lambda >= lambda(T_{n,2}).

    Even n: K^{+2}_{n/2+1,n/2-1} minus one cross edge at an embedded edge.
    Odd n: K^{+2}_{(n+3)/2,(n-3)/2}, and K^{+2}_{(n+1)/2,(n-1)/2} minus two cross
    edges destroying two triangles.
    """
    if n < 10:
        raise GraphConstructionError("the n-3 triangle family is built for n >= 10")
    if n % 2 == 0:
        spec = kplus2_spec(n // 2 + 1, n // 2 - 1)
        candidates = figure_deletion_family(
            spec, 1, useful_cross_edge, destroys_exactly(2 * spec.t, 1)
        )
    else:
        spec = kplus2_spec((n + 1) // 2, (n - 1) // 2)
        candidates = [kplus2_st((n + 3) // 2, (n - 3) // 2)] + figure_deletion_family(
            spec, 2, useful_cross_edge, destroys_exactly(2 * spec.t, 2)
        )
    reference = math.sqrt(n * n // 4)
    family = []
    for g in candidates:
        if _triangle_total(g) != n - 3:
            continue
        if spectral_radius(g).radius >= reference - COMPARISON_MARGIN:
            family.append(g)
    logger.info(f"n-3 triangle family at n={n}: {len(family)} of {len(candidates)} candidates")
    return family


class DeletionCase:
    """One case of the K^{+2}_{s,t} deletion analysis at even n."""

    def __init__(
        self,
        name: str,
        spec: EmbeddedBipartiteSpec,
        k: int,
        candidate: EdgeFilter,
        accept: ClassFilter | None,
        polynomials: list[str],
    ):
        self.name = name
        self.spec = spec
        self.k = k
        self.candidate = candidate
        self.accept = accept
        self.polynomials = polynomials

    def family(self) -> list[Graph]:
        return figure_deletion_family(self.spec, self.k, self.candidate, self.accept)


def kplus2_deletion_cases(n: int) -> list[DeletionCase]:
    """The five s-cases for subgraphs of K^{+2}_{s,n-s} with both embedded edges kept.

    s = n/2-2: any single cross deletion.
    s = n/2-1: two deletions at the same matched S-vertex.
    s = n/2: three deletions destroying three distinct triangles.
    s = n/2+1: two deletions destroying two triangles.
    s = n/2+2: the base graph.
    """
    if n % 2 or n < 12:
        raise GraphConstructionError("deletion cases are defined for even n >= 12")
    h = n // 2

    def case(offset: int) -> EmbeddedBipartiteSpec:
        return kplus2_spec(h + offset, h - offset)

    return [
        DeletionCase("s=n/2-2", case(-2), 1, any_cross_edge, None, ["l1"]),
        DeletionCase("s=n/2-1", case(-1), 2, at_s_vertex(0), None, ["l2"]),
        DeletionCase(
            "s=n/2", case(0), 3, useful_cross_edge, destroys_exactly(2 * h, 3),
            ["l3", "l4", "l5", "l6", "l7", "l8"],
        ),
        DeletionCase(
            "s=n/2+1", case(1), 2, useful_cross_edge, destroys_exactly(2 * (h - 1), 2),
            ["l9", "l10", "l11", "l12"],
        ),
        DeletionCase("s=n/2+2", case(2), 0, any_cross_edge, None, ["l13"]),
    ]


def kplusplus_deletion_family(
    s: int, t: int, reading: str = "one-per-side", max_deletions: int = 4
) -> list[Graph]:
    """Subgraphs of K^{++}_{s,t} keeping its embedded edges with at most n-4 triangles.

    Only deletions of cross edges lying in triangles are tried; every subgraph with
    at most n-4 triangles contains one of these with at most four deletions.
    """
    spec = kplusplus_spec(s, t, reading)
    n = s + t
    out: list[Graph] = []
    seen: set[CanonicalForm] = set()
    for k in range(1, max_deletions + 1):
        for g in figure_deletion_family(spec, k, useful_cross_edge):
            if _triangle_total(g) > n - 4:
                continue
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out
