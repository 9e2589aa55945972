"""Tests for exceptions module."""

import pytest

from specsup.exceptions import (
    SpecsupError,
    GraphConstructionError,
    GraphSizeError,
    PartitionError,
    ConvergenceError,
    PolynomialDomainError,
    SurdError,
    UnknownPolynomialError,
    UnknownPredicateError,
    UnknownFamilyError,
    IdentificationError,
    Graph6ParseError,
    InfeasibleSearchError,
)


class TestExceptions:
    """Test custom exceptions."""

    def test_specsup_error_is_base_exception(self):
        """Test SpecsupError is base for all custom exceptions."""
        for cls in (
            GraphConstructionError,
            GraphSizeError,
            PartitionError,
            ConvergenceError,
            PolynomialDomainError,
            SurdError,
            UnknownPolynomialError,
            UnknownPredicateError,
            UnknownFamilyError,
            IdentificationError,
            Graph6ParseError,
            InfeasibleSearchError,
        ):
            assert issubclass(cls, SpecsupError)

    def test_partition_error_carries_location(self):
        """Test PartitionError keeps the offending vertex and class."""
        with pytest.raises(PartitionError) as exc_info:
            raise PartitionError("not equitable", vertex=3, cls=1)
        assert exc_info.value.vertex == 3
        assert exc_info.value.cls == 1
        assert "not equitable" in str(exc_info.value)

    def test_convergence_error_carries_estimate(self):
        """Test ConvergenceError keeps the best estimate."""
        error = ConvergenceError("cap reached", best_estimate=2.5)
        assert error.best_estimate == 2.5

    def test_graph6_error_reports_offset(self):
        """Test Graph6ParseError formats the offset into its message."""
        error = Graph6ParseError("bad byte", offset=4)
        assert error.offset == 4
        assert error.detail == "bad byte"
        assert "offset 4" in str(error)

    def test_identification_error_defaults_to_no_matches(self):
        """Test IdentificationError without matches has an empty list."""
        assert IdentificationError("none").matches == []
        assert IdentificationError("two", matches=[0, 2]).matches == [0, 2]

    def test_exceptions_can_be_caught_by_base(self):
        """Test all exceptions can be caught by SpecsupError."""
        exceptions = [
            GraphSizeError("test"),
            UnknownFamilyError("test"),
            InfeasibleSearchError("test"),
        ]

        for exc in exceptions:
            try:
                raise exc
            except SpecsupError as e:
                assert str(e) == "test"
