"""Per-graph cache of the invariants predicates need, plus reference spectral comparisons."""

import logging
from functools import cache, cached_property

from pydantic import BaseModel, ConfigDict, Field
from sympy import Poly

from ..config import (
    COMPARISON_MARGIN,
    DEFAULT_TOLERANCE,
    EXACT_MAXCUT_LIMIT,
    EXACT_SPECTRUM_LIMIT,
    TIGHT_TOLERANCE,
)
from ..construction.families import kplus, kplus2
from ..core.bipartition import max_cut
from ..core.graph_ops import is_complete_bipartite
from ..counting.bowties import count_bowties, count_bowties_bruteforce, fk_number
from ..counting.cover import triangle_cover_number
from ..counting.matching import max_matching
from ..counting.triangles import (
    booksize,
    booksize_bruteforce,
    count_triangles_bruteforce,
    triangle_stats,
    triangular_edge_count,
)
from ..enumeration.canonical import are_isomorphic
from ..enumeration.graph6 import graph6_encode
from ..models import BipartiteDistance, Graph
from ..spectral.power_iteration import lambda_of
from ..spectral.quotient import X, adjacency_char_poly, char_poly, quotient_of
from ..spectral.roots import as_poly, compare_largest_roots

logger = logging.getLogger(__name__)

# margin applied after recomputing lambda at the tightened tolerance
_TIGHT_MARGIN = 100 * TIGHT_TOLERANCE


class Reference(BaseModel):
    """A spectral threshold: its numeric value and a polynomial whose largest root it is."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str = Field(..., description="Human-readable reference name")
    value: float = Field(..., description="Numeric value")
    poly: Poly = Field(..., description="Polynomial whose largest root is the reference")


class Comparison(BaseModel):
    """Sign of lambda(G) - reference, or None when it could not be settled."""

    sign: int | None = Field(default=None, description="-1, 0, 1 or None if unresolved")
    difference: float = Field(..., description="Numeric lambda(G) - reference")
    resolution: str = Field(..., description="numeric, tightened, exact or unresolved")


def _from_graph(name: str, g: Graph) -> Reference:
    return Reference(name=name, value=lambda_of(g), poly=char_poly(quotient_of(g)))


@cache
def turan_reference(n: int) -> Reference:
    """lambda(T_{n,2}) = sqrt(floor(n^2/4))."""
    square = n * n // 4
    return Reference(name="T_{n,2}", value=square**0.5, poly=as_poly(X**2 - square))


@cache
def kplus_reference(n: int) -> Reference:
    return _from_graph("K^+", kplus(n))


@cache
def kplus2_reference(n: int) -> Reference:
    return _from_graph("K^{+2}", kplus2(n))


def sqrt_reference(m: int) -> Reference:
    return Reference(name="sqrt(m)", value=m**0.5, poly=as_poly(X**2 - m))


class GraphContext:
    """Lazily computed invariants of one graph.

    With oracle=True the triangle, book and bowtie counts come from the
    brute-force counters instead of the fast ones.
    """

    def __init__(self, g: Graph, oracle: bool = False):
        self.g = g
        self.n = g.n
        self.m = g.m
        self.oracle = oracle
        self._comparisons: dict[str, Comparison] = {}

    @cached_property
    def triangles(self) -> int:
        if self.oracle:
            return count_triangles_bruteforce(self.g)
        return triangle_stats(self.g).total

    @cached_property
    def booksize(self) -> int:
        return booksize_bruteforce(self.g) if self.oracle else booksize(self.g)

    @cached_property
    def bowties(self) -> int:
        return count_bowties_bruteforce(self.g) if self.oracle else count_bowties(self.g)

    @cached_property
    def triangular_edges(self) -> int:
        return triangular_edge_count(self.g)

    @cached_property
    def tau3(self) -> int:
        return triangle_cover_number(self.g)

    @cached_property
    def lam(self) -> float:
        return lambda_of(self.g, DEFAULT_TOLERANCE)

    @cached_property
    def bipartite_distance(self) -> BipartiteDistance | None:
        if self.n > EXACT_MAXCUT_LIMIT:
            return None
        return max_cut(self.g, "exact")

    @cached_property
    def matching_number(self) -> int:
        return max_matching(self.g)

    @cached_property
    def fk(self) -> int:
        return fk_number(self.g)

    @cached_property
    def complete_bipartite(self) -> bool:
        """Complete bipartite plus isolated vertices (the edgeless graph included)."""
        return is_complete_bipartite(self.g, allow_isolated=True)

    @cached_property
    def is_turan(self) -> bool:
        if self.n == 0:
            return True
        return (
            self.m == self.n * self.n // 4
            and is_complete_bipartite(self.g, allow_isolated=False)
        )

    @cached_property
    def graph6(self) -> str:
        return graph6_encode(self.g)

    @cached_property
    def char_poly(self) -> Poly:
        return adjacency_char_poly(self.g)

    def is_isomorphic_to(self, h: Graph) -> bool:
        return are_isomorphic(self.g, h)

    def compare(self, reference: Reference) -> Comparison:
        """Sign of lambda(G) - reference.

        A difference within the comparison margin is recomputed at the tightened
        tolerance; if still within margin and n is small, it is settled exactly
        through the characteristic polynomial of A(G).
        """
        cached = self._comparisons.get(reference.name)
        if cached is not None:
            return cached
        diff = self.lam - reference.value
        if abs(diff) > COMPARISON_MARGIN:
            result = Comparison(sign=1 if diff > 0 else -1, difference=diff, resolution="numeric")
        else:
            diff = lambda_of(self.g, TIGHT_TOLERANCE) - reference.value
            if abs(diff) > _TIGHT_MARGIN:
                result = Comparison(
                    sign=1 if diff > 0 else -1, difference=diff, resolution="tightened"
                )
            elif self.n <= EXACT_SPECTRUM_LIMIT and self.m > 0:
                sign = compare_largest_roots(self.char_poly, reference.poly)
                result = Comparison(sign=sign, difference=diff, resolution="exact")
            elif self.m == 0:
                sign = compare_largest_roots(as_poly(X), reference.poly)
                result = Comparison(sign=sign, difference=diff, resolution="exact")
            else:
                result = Comparison(sign=None, difference=diff, resolution="unresolved")
            logger.debug(
                f"Borderline comparison with {reference.name}: diff={diff:.3g}, "
                f"resolved by {result.resolution}"
            )
        self._comparisons[reference.name] = result
        return result

    def bruteforce(self) -> "GraphContext":
        """A fresh context on the same graph using the brute-force counters."""
        return GraphContext(self.g, oracle=True)

