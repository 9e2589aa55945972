"""Canonical forms, graph6 interchange and isomorph-free generation.

The exhaustive verifier lives in specsup.enumeration.verifier; it depends on
the theorems package and is not re-exported here.
"""

from .canonical import (
    canonical_form,
    canonical_graph,
    are_isomorphic,
    permutation_filter_classes,
)
from .graph6 import graph6_decode, graph6_encode, graph6_read_stream, strip_graph6_header
from .generator import generate_all, augment

__all__ = [
    "canonical_form",
    "canonical_graph",
    "are_isomorphic",
    "permutation_filter_classes",
    "graph6_decode",
    "graph6_encode",
    "graph6_read_stream",
    "strip_graph6_header",
    "generate_all",
    "augment",
]
