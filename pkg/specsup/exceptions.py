"""Custom exceptions for specsup."""


class SpecsupError(Exception):
    """Base exception for specsup."""

    pass


class GraphConstructionError(SpecsupError):
    """Raised when a graph or embedded-bipartite spec is malformed."""

    pass


class GraphSizeError(SpecsupError):
    """Raised when an input exceeds (or falls below) a supported size."""

    pass


class PartitionError(SpecsupError):
    """Raised when a vertex partition is not equitable."""

    def __init__(self, message: str, vertex: int | None = None, cls: int | None = None):
        super().__init__(message)
        self.vertex = vertex
        self.cls = cls


class ConvergenceError(SpecsupError):
    """Raised when power iteration hits its iteration cap."""

    def __init__(self, message: str, best_estimate: float | None = None):
        super().__init__(message)
        self.best_estimate = best_estimate


class PolynomialDomainError(SpecsupError):
    """Raised for the zero polynomial or a polynomial without real roots."""

    pass


class SurdError(SpecsupError):
    """Raised when a quadratic surd a + b*sqrt(c) is malformed."""

    pass


class UnknownPolynomialError(SpecsupError):
    """Raised when a polynomial name is not in the registry."""

    pass


class UnknownPredicateError(SpecsupError):
    """Raised when a predicate id is not registered."""

    pass


class UnknownFamilyError(SpecsupError):
    """Raised when a graph family name is not registered."""

    pass


class IdentificationError(SpecsupError):
    """Raised when a polynomial matches zero or several graph classes."""

    def __init__(self, message: str, matches: list[int] | None = None):
        super().__init__(message)
        self.matches = matches or []


class Graph6ParseError(SpecsupError):
    """Raised when a graph6 line cannot be decoded."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (offset {offset})")
        self.detail = message
        self.offset = offset


class InfeasibleSearchError(SpecsupError):
    """Raised when no constraint-satisfying starting graph exists."""

    pass
