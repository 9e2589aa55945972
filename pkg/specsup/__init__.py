"""specsup - Spectral supersaturation toolkit for triangles and bowties."""

__version__ = "0.1.0"

from .models import Graph, Verdict, VerdictStatus, SearchConfig, SearchResult, Report
from .exceptions import (
    SpecsupError,
    GraphConstructionError,
    GraphSizeError,
    PartitionError,
    ConvergenceError,
    PolynomialDomainError,
    UnknownPolynomialError,
    UnknownPredicateError,
    UnknownFamilyError,
    Graph6ParseError,
    InfeasibleSearchError,
)
from .factories.component_factory import create_registry, create_runner

__all__ = [
    # Models
    "Graph",
    "Verdict",
    "VerdictStatus",
    "SearchConfig",
    "SearchResult",
    "Report",
    # Exceptions
    "SpecsupError",
    "GraphConstructionError",
    "GraphSizeError",
    "PartitionError",
    "ConvergenceError",
    "PolynomialDomainError",
    "UnknownPolynomialError",
    "UnknownPredicateError",
    "UnknownFamilyError",
    "Graph6ParseError",
    "InfeasibleSearchError",
    # Main entry points
    "create_registry",
    "create_runner",
]
