"""Spectral radius, quotient matrices and exact polynomial root work."""

from .power_iteration import spectral_radius, lambda_of
from .quotient import (
    equitable_quotient,
    char_poly,
    adjacency_char_poly,
    coarsest_equitable_partition,
)
from .roots import (
    largest_real_root,
    sign_at,
    compare_largest_roots,
    count_roots_above,
    largest_root_vs,
    root_below,
    surd,
)
from .registry import named_polynomial, verify_polynomial, check_claims
from .identification import match_polynomial_to_class

__all__ = [
    "spectral_radius",
    "lambda_of",
    "equitable_quotient",
    "char_poly",
    "adjacency_char_poly",
    "coarsest_equitable_partition",
    "largest_real_root",
    "sign_at",
    "compare_largest_roots",
    "count_roots_above",
    "largest_root_vs",
    "root_below",
    "surd",
    "named_polynomial",
    "verify_polynomial",
    "check_claims",
    "match_polynomial_to_class",
]
