"""Graph data model operations."""

from .graph_ops import (
    from_edges,
    from_rows,
    toggle_edge,
    is_bipartite,
    make_bipartition,
    complement,
    induced_subgraph,
    relabel,
    disjoint_union,
    is_complete_bipartite,
)
from .bipartition import max_cut, bad_sets

__all__ = [
    "from_edges",
    "from_rows",
    "toggle_edge",
    "is_bipartite",
    "make_bipartition",
    "complement",
    "induced_subgraph",
    "relabel",
    "disjoint_union",
    "is_complete_bipartite",
    "max_cut",
    "bad_sets",
]
