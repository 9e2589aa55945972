"""Executable theorem predicates, family checks and the structural probe."""

from .base_predicate import BasePredicate, Conclusion, Hypothesis
from .context import GraphContext
from .family_checks import FAMILY_CHECKS
from .predicates import ALL_PREDICATES
from .probe import probe
from .registry import PredicateRegistry

__all__ = [
    "BasePredicate",
    "Conclusion",
    "Hypothesis",
    "GraphContext",
    "FAMILY_CHECKS",
    "ALL_PREDICATES",
    "probe",
    "PredicateRegistry",
]
