"""Equitable partitions, quotient matrices and characteristic polynomials."""

import logging
from collections.abc import Sequence

import sympy
from sympy import Matrix, Poly

from ..enumeration.canonical import refine_cells
from ..exceptions import PartitionError
from ..models import Graph, QuotientMatrix

logger = logging.getLogger(__name__)

X = sympy.Symbol("x")


def equitable_quotient(g: Graph, partition: Sequence[int]) -> QuotientMatrix:
    """Quotient matrix of an equitable partition.

    Args:
        g: Graph
        partition: Class index (0..k-1) of every vertex

    Returns:
        QuotientMatrix with b[i][j] the neighbours in class j of any vertex in class i

    Raises:
        PartitionError: If a class is empty, an index is invalid, or a vertex
            disagrees with its class on the number of neighbours in some class
    """
    if len(partition) != g.n:
        raise PartitionError(f"partition covers {len(partition)} vertices, graph has {g.n}")
    k = max(partition, default=-1) + 1
    masks = [0] * k
    for v, c in enumerate(partition):
        if c < 0:
            raise PartitionError(f"vertex {v} has negative class {c}", vertex=v, cls=c)
        masks[c] |= 1 << v
    for c, mask in enumerate(masks):
        if not mask:
            raise PartitionError(f"class {c} is empty", cls=c)

    rows: list[tuple[int, ...] | None] = [None] * k
    for v, c in enumerate(partition):
        counts = tuple((g.adj[v] & mask).bit_count() for mask in masks)
        if rows[c] is None:
            rows[c] = counts
            continue
        for j, (got, want) in enumerate(zip(counts, rows[c])):
            if got != want:
                raise PartitionError(
                    f"vertex {v} of class {c} has {got} neighbours in class {j}, expected {want}",
                    vertex=v,
                    cls=j,
                )
    sizes = tuple(mask.bit_count() for mask in masks)
    return QuotientMatrix(k=k, b=tuple(rows), class_sizes=sizes)  # type: ignore[arg-type]


def _to_poly(expr: sympy.Expr) -> Poly:
    return Poly(expr, X, domain="QQ")


def char_poly(q: QuotientMatrix) -> Poly:
    """Characteristic polynomial det(xI - B) of a quotient matrix over QQ."""
    if q.k == 0:
        return _to_poly(sympy.Integer(1))
    return _to_poly(Matrix(q.b).charpoly(X).as_expr())


def adjacency_char_poly(g: Graph) -> Poly:
    """Characteristic polynomial of the full adjacency matrix (Berkowitz, exact)."""
    if g.n == 0:
        return _to_poly(sympy.Integer(1))
    a = Matrix(g.n, g.n, lambda i, j: 1 if g.adj[i] >> j & 1 else 0)
    return _to_poly(a.charpoly(X).as_expr())


def coarsest_equitable_partition(g: Graph) -> list[int]:
    """Class index per vertex of the coarsest equitable partition.

    Refining the single-cell partition yields the coarsest equitable one.
    """
    if g.n == 0:
        return []
    cells = refine_cells(g, [list(range(g.n))])
    partition = [0] * g.n
    for c, cell in enumerate(cells):
        for v in cell:
            partition[v] = c
    logger.debug(f"Coarsest equitable partition of n={g.n}: {len(cells)} classes")
    return partition


def quotient_of(g: Graph) -> QuotientMatrix:
    return equitable_quotient(g, coarsest_equitable_partition(g))
