"""Canonical forms by partition refinement with twin pruning.

The canonical form is the minimal relabelled adjacency (compared row by row on the
upper triangle) over the leaves of an individualisation-refinement tree. The tree
starts from the degree partition, refines to an equitable ordered partition, and
branches only on one vertex per twin class of the first non-singleton cell. Cells
consisting of mutual twins are split in place, since any order of twins yields the
same relabelled matrix.
"""

import logging
from itertools import permutations

from ..core.graph_ops import relabel
from ..models import CanonicalForm, Graph, bits_of

logger = logging.getLogger(__name__)


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((adj[v] & mask).bit_count() for mask in masks)
                groups.setdefault(key, []).append(v)
            for key in sorted(groups):
                refined.append(groups[key])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _twin_groups(adj: tuple[int, ...], cell: list[int]) -> list[list[int]]:
    groups: dict[tuple[int, int], list[int]] = {}
    for v in cell:
        open_key = (0, adj[v])
        closed_key = (1, adj[v] | 1 << v)
        if open_key in groups:
            groups[open_key].append(v)
        elif closed_key in groups:
            groups[closed_key].append(v)
        else:
            # a singleton is keyed both ways until a partner shows up
            bucket = [v]
            groups[open_key] = bucket
            groups[closed_key] = bucket
    seen: set[int] = set()
    out = []
    for bucket in groups.values():
        if id(bucket) not in seen:
            seen.add(id(bucket))
            out.append(bucket)
    return out


def _split_twin_cells(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    out: list[list[int]] = []
    for cell in cells:
        if len(cell) > 1 and len(_twin_groups(adj, cell)) == 1:
            out.extend([v] for v in cell)
        else:
            out.append(cell)
    return out


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    position = [0] * len(order)
    for i, v in enumerate(order):
        position[v] = i
    rows = []
    for i, v in enumerate(order):
        row = 0
        for w in bits_of(adj[v]):
            j = position[w]
            if j > i:
                row |= 1 << (len(order) - 1 - j)
        rows.append(row)
    return tuple(rows)


def _canonical_search(adj: tuple[int, ...], n: int) -> tuple[tuple[int, ...], list[int]]:
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    root = [by_degree[d] for d in sorted(by_degree)]

    best_code: tuple[int, ...] | None = None
    best_order: list[int] = []
    stack = [root]
    while stack:
        cells = _split_twin_cells(adj, _refine(adj, stack.pop()))
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = [cell[0] for cell in cells]
            code = _leaf_code(adj, order)
            if best_code is None or code < best_code:
                best_code = code
                best_order = order
            continue
        cell = cells[target]
        for group in reversed(_twin_groups(adj, cell)):
            v = group[0]
            rest = [w for w in cell if w != v]
            stack.append(cells[:target] + [[v], rest] + cells[target + 1:])
    return best_code or (), best_order


def _pack(n: int, rows: tuple[int, ...]) -> bytes:
    width = max(1, (n + 7) // 8)
    return b"".join(row.to_bytes(width, "big") for row in rows)


def canonical_form(g: Graph) -> CanonicalForm:
    """Compute the canonical form of g; equal forms mean isomorphic graphs."""
    if g.n == 0:
        return CanonicalForm(n=0, code=b"", labeling=())
    rows, order = _canonical_search(g.adj, g.n)
    return CanonicalForm(n=g.n, code=_pack(g.n, rows), labeling=tuple(order))


def refined_partition(g: Graph) -> list[list[int]]:
    """Equitable ordered partition reached from the degree partition."""
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.adj[v].bit_count(), []).append(v)
    return _refine(g.adj, [by_degree[d] for d in sorted(by_degree)])


def canonical_graph(g: Graph) -> Graph:
    """Relabel g into its canonical labelling."""
    form = canonical_form(g)
    return relabel(g, form.labeling)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(r.bit_count() for r in g.adj) != sorted(r.bit_count() for r in h.adj):
        return False
    return canonical_form(g) == canonical_form(h)


def permutation_filter_classes(n: int) -> int:
    """Count isomorphism classes on n vertices by brute force over all labelled graphs.

    Labelled graphs are edge masks. Each unvisited mask starts a new class and
    its whole orbit under the n! vertex permutations is marked visited.
    Independent of the refinement search; practical up to n = 7.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {pair: k for k, pair in enumerate(pairs)}
    # pair index -> image pair index, one table per permutation
    tables = [
        [index[(min(p[u], p[v]), max(p[u], p[v]))] for u, v in pairs]
        for p in permutations(range(n))
    ]
    seen = bytearray(1 << len(pairs))
    classes = 0
    for mask in range(len(seen)):
        if seen[mask]:
            continue
        classes += 1
        present = [k for k in range(len(pairs)) if mask >> k & 1]
        for table in tables:
            image = 0
            for k in present:
                image |= 1 << table[k]
            seen[image] = 1
    logger.debug(f"Permutation filter n={n}: {classes} classes")
    return classes


def refine_cells(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition of g until it is equitable."""
    return _refine(g.adj, [list(cell) for cell in cells if cell])
