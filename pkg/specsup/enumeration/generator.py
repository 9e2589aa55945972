"""Isomorph-free generation of all graphs on n vertices by canonical augmentation.

A child of a parent on k vertices adds vertex k joined to some subset of the
parent. The child is kept iff removing the vertex placed last by its canonical
labelling gives a graph isomorphic to the parent. Every class has exactly one
canonical parent class, so parents can be expanded independently.
"""

import logging
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor

from ..config import ENUMERATION_LIMIT
from ..core.graph_ops import from_rows, induced_subgraph, relabel
from ..exceptions import GraphSizeError
from ..models import CanonicalForm, Graph
from .canonical import canonical_form
from .graph6 import graph6_encode

logger = logging.getLogger(__name__)


def augment(parent: Graph) -> list[Graph]:
    """Canonical children of one parent, each in its canonical labelling."""
    k = parent.n
    parent_form = canonical_form(parent)
    seen: set[CanonicalForm] = set()
    children: list[Graph] = []
    for mask in range(1 << k):
        rows = [row | (mask >> v & 1) << k for v, row in enumerate(parent.adj)]
        child = from_rows(rows + [mask])
        form = canonical_form(child)
        if form in seen:
            continue
        seen.add(form)
        last = form.labeling[-1]
        reduced = induced_subgraph(child, [v for v in range(k + 1) if v != last])
        if canonical_form(reduced) == parent_form:
            children.append(relabel(child, form.labeling))
    return children


def _expand(parents: Sequence[Graph], workers: int) -> list[Graph]:
    if workers <= 1 or len(parents) < 2:
        batches = [augment(p) for p in parents]
    else:
        chunk = max(1, len(parents) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(augment, parents, chunksize=chunk))
    level = [g for batch in batches for g in batch]
    level.sort(key=graph6_encode)
    return level


def generate_all(n: int, workers: int = 1) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of graphs on n vertices.

    Args:
        n: Vertex count, at most ENUMERATION_LIMIT
        workers: Processes used to expand parents

    Yields:
        Canonically labelled graphs, sorted by graph6

    Raises:
        GraphSizeError: If n is negative or exceeds the enumeration limit
    """
    if n < 0 or n > ENUMERATION_LIMIT:
        raise GraphSizeError(
            f"built-in generation supports 0 <= n <= {ENUMERATION_LIMIT}, got n={n}; "
            "feed a graph6 stream instead"
        )
    level = [from_rows([])]
    for k in range(1, n + 1):
        level = _expand(level, workers)
        logger.info(f"Generated {len(level)} classes on {k} vertices")
    yield from level
