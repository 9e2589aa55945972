"""Constructors for extremal graphs and their deletion families."""

from .families import (
    build_embedded,
    turan_bipartite,
    complete,
    cycle,
    star,
    friendship,
    kplus,
    kplus2,
    kplus2_st,
    kplusplus,
    kab_plus2,
    y_n2q,
    kplus_bar,
    kplus2_bar,
    family_names,
    build_family,
)
from .deletions import (
    figure_deletion_family,
    n_minus_3_extremal_family,
    kplus2_deletion_cases,
    kplusplus_deletion_family,
)

__all__ = [
    "build_embedded",
    "turan_bipartite",
    "complete",
    "cycle",
    "star",
    "friendship",
    "kplus",
    "kplus2",
    "kplus2_st",
    "kplusplus",
    "kab_plus2",
    "y_n2q",
    "kplus_bar",
    "kplus2_bar",
    "family_names",
    "build_family",
    "figure_deletion_family",
    "n_minus_3_extremal_family",
    "kplus2_deletion_cases",
    "kplusplus_deletion_family",
]
