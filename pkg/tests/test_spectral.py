"""Tests for spectral radius, quotient matrices, exact roots and the polynomial registry."""

from fractions import Fraction

import numpy as np
import pytest
import sympy

from specsup.construction.families import complete, kplus2, star, turan_bipartite
from specsup.core.graph_ops import adjacency_array
from specsup.enumeration.generator import generate_all
from specsup.exceptions import (
    ConvergenceError,
    GraphSizeError,
    IdentificationError,
    PartitionError,
    PolynomialDomainError,
    SurdError,
    UnknownPolynomialError,
)
from specsup.spectral.identification import match_polynomial_to_class
from specsup.spectral.power_iteration import lambda_of, spectral_radius
from specsup.spectral.quotient import (
    X,
    adjacency_char_poly,
    char_poly,
    coarsest_equitable_partition,
    equitable_quotient,
)
from specsup.spectral.registry import check_claims, named_polynomial, root_of, verify_polynomial
from specsup.spectral.roots import (
    as_poly,
    compare_largest_roots,
    count_roots_above,
    largest_real_root,
    largest_root_vs,
    root_below,
    sign_at,
    surd,
)


def poly(expr: str) -> sympy.Poly:
    return as_poly(sympy.sympify(expr, locals={"x": X}))


class TestSpectralRadius:
    """Test power iteration."""

    @pytest.mark.parametrize(
        "graph,expected",
        [(complete(5), 4.0), (turan_bipartite(8), 4.0), (star(4), 2.0)],
    )
    def test_known_radii(self, graph, expected):
        """Test regular, bipartite and star graphs."""
        result = spectral_radius(graph)
        assert result.radius == pytest.approx(expected, abs=1e-9)
        assert result.residual <= 1e-10

    def test_cycle(self, c5):
        """Test C_5 is 2-regular."""
        assert lambda_of(c5) == pytest.approx(2.0, abs=1e-9)

    def test_perron_vector(self, k5):
        """Test the Perron vector of K_5 is uniform and unit."""
        perron = np.array(spectral_radius(k5).perron)
        assert np.linalg.norm(perron) == pytest.approx(1.0)
        assert np.allclose(perron, perron[0])

    def test_small_graphs(self):
        """Test a single edge has radius 1 and a single vertex radius 0."""
        assert spectral_radius(star(1)).radius == pytest.approx(1.0)
        assert lambda_of(turan_bipartite(1)) == 0.0

    def test_against_eigvalsh(self):
        """Test against dense eigenvalues on every graph with 5 vertices."""
        for g in generate_all(5):
            expected = max(np.linalg.eigvalsh(adjacency_array(g)), default=0.0)
            assert lambda_of(g) == pytest.approx(expected, abs=1e-8)

    def test_rejects_non_positive_tolerance(self, k3):
        """Test tol must be positive."""
        with pytest.raises(ValueError):
            spectral_radius(k3, tol=0)


class TestQuotient:
    """Test equitable quotients and characteristic polynomials."""

    def test_bipartite_quotient(self, turan8):
        """Test the two-part quotient of K_{4,4}."""
        q = equitable_quotient(turan8, [0, 0, 0, 0, 1, 1, 1, 1])
        assert q.b == ((0, 4), (4, 0))
        assert q.class_sizes == (4, 4)
        assert char_poly(q) == poly("x**2 - 16")

    def test_non_equitable_partition(self):
        """Test a star with one class is rejected."""
        with pytest.raises(PartitionError):
            equitable_quotient(star(3), [0, 0, 0, 0])

    def test_empty_class(self, k3):
        """Test skipped class indices are rejected."""
        with pytest.raises(PartitionError) as exc_info:
            equitable_quotient(k3, [0, 2, 2])
        assert exc_info.value.cls == 1

    def test_wrong_length(self, k3):
        """Test the partition must cover every vertex."""
        with pytest.raises(PartitionError):
            equitable_quotient(k3, [0, 0])

    def test_kplus2_quotient_matches_f(self):
        """Test the coarsest quotient of K^{+2} on 10 vertices gives polynomial f."""
        g = kplus2(10)
        q = equitable_quotient(g, coarsest_equitable_partition(g))
        assert q.k == 3
        assert char_poly(q) == named_polynomial("f", 10)

    def test_quotient_root_is_radius(self):
        """Test the quotient's largest root equals lambda."""
        g = kplus2(12)
        p = char_poly(equitable_quotient(g, coarsest_equitable_partition(g)))
        assert largest_real_root(p) == pytest.approx(lambda_of(g), abs=1e-9)

    def test_adjacency_char_poly(self, k3):
        """Test det(xI - A) of K_3."""
        assert adjacency_char_poly(k3) == poly("x**3 - 3*x - 2")


class TestRoots:
    """Test exact root work."""

    def test_largest_real_root(self):
        """Test the largest root of x^3 - 2x."""
        assert largest_real_root(poly("x**3 - 2*x")) == pytest.approx(2**0.5, abs=1e-12)

    def test_bracketed_root(self):
        """Test only roots inside the bracket count."""
        p = poly("(x - 1)*(x - 3)")
        assert largest_real_root(p, bracket=(0, 2)) == pytest.approx(1.0)

    def test_no_real_root(self):
        """Test polynomials without real roots."""
        with pytest.raises(PolynomialDomainError):
            largest_real_root(poly("x**2 + 1"))
        with pytest.raises(PolynomialDomainError):
            largest_real_root(poly("0"))

    def test_compare_largest_roots(self):
        """Test ordering and equality of largest roots."""
        assert compare_largest_roots(poly("x**2 - 2"), poly("x**2 - 3")) == -1
        assert compare_largest_roots(poly("x**2 - 3"), poly("x**2 - 2")) == 1
        assert compare_largest_roots(poly("(x**2 - 2)*(x - 1)"), poly("x**2 - 2")) == 0

    def test_sign_at_surd(self):
        """Test exact signs at sqrt(2)."""
        root2 = surd(0, 1, 2)
        assert sign_at(poly("x**2 - 2"), root2) == 0
        assert sign_at(poly("x - 1"), root2) == 1
        assert sign_at(poly("x - 3/2"), root2) == -1

    def test_surd_folds_rational_roots(self):
        """Test 1 + 2*sqrt(4) becomes 5."""
        value = surd(1, 2, 4)
        assert value.a == Fraction(5)
        assert value.b == 0

    def test_negative_radicand(self):
        """Test sqrt of a negative number is rejected."""
        with pytest.raises(SurdError):
            surd(0, 1, -1)

    def test_count_roots_above(self):
        """Test Sturm counts, including a root at the point."""
        assert count_roots_above(poly("x**2 - 2"), 0) == 1
        assert count_roots_above(poly("(x - 1)*(x - 2)*(x - 3)"), 1) == 2
        assert count_roots_above(poly("(x - 1)**2*(x - 2)"), surd(0, 1, 2)) == 1

    def test_largest_root_vs(self):
        """Test the largest root against a point."""
        p = poly("x**2 - 2")
        assert largest_root_vs(p, 1) == 1
        assert largest_root_vs(p, surd(0, 1, 2)) == 0
        assert largest_root_vs(p, 2) == -1

    def test_root_below(self):
        """Test certification of a root below a point."""
        p = poly("x**2 - 2")
        assert root_below(p, Fraction(3, 2), (1, 2))
        assert not root_below(p, Fraction(7, 5), (1, 2))
        assert not root_below(p, 3, (1, 2))


class TestPolynomialRegistry:
    """Test the registered polynomials."""

    def test_f_reproduces_kplus2(self):
        """Test f matches lambda(K^{+2}) at n = 10."""
        report = verify_polynomial("f", n=10)
        assert report.matched == [0]
        assert report.largest_root == pytest.approx(lambda_of(kplus2(10)), abs=1e-9)

    def test_f_needs_even_n(self):
        """Test f is only defined for even n."""
        with pytest.raises(GraphSizeError):
            verify_polynomial("f", n=11)

    def test_missing_n(self):
        """Test polynomials in n need n."""
        with pytest.raises(GraphSizeError):
            named_polynomial("f")

    def test_unknown_name(self):
        """Test unregistered names."""
        with pytest.raises(UnknownPolynomialError):
            named_polynomial("zz", 10)

    def test_h_claims(self):
        """Test h - f is reproduced and the quoted h - g constant is not."""
        checks = {c.name: c for c in check_claims(["h"])}
        assert checks["h-f"].agrees
        assert not checks["h-g"].agrees

    def test_root_of(self):
        """Test root_of evaluates the largest root at n."""
        assert root_of("f")(10) == pytest.approx(largest_real_root(named_polynomial("f", 10)))


class TestIdentification:
    """Test matching a polynomial to a graph class."""

    def test_unique_match(self):
        """Test f picks K^{+2} over T_{n,2}."""
        index = match_polynomial_to_class(
            lambda n: [turan_bipartite(n), kplus2(n)], root_of("f"), [10, 12]
        )
        assert index == 1

    def test_ambiguous_match(self):
        """Test two identical classes are reported."""
        with pytest.raises(IdentificationError) as exc_info:
            match_polynomial_to_class(lambda n: [kplus2(n), kplus2(n)], root_of("f"), [10])
        assert exc_info.value.matches == [0, 1]

    def test_no_match(self):
        """Test no class matches."""
        with pytest.raises(IdentificationError) as exc_info:
            match_polynomial_to_class(lambda n: [turan_bipartite(n)], root_of("f"), [10])
        assert exc_info.value.matches == []


class TestLambdaFallback:
    """Test lambda_of when power iteration does not converge."""

    def test_uses_best_estimate(self, mocker, k3):
        """Test the best estimate is returned and a warning logged."""
        mocker.patch(
            "specsup.spectral.power_iteration.spectral_radius",
            side_effect=ConvergenceError("no convergence", best_estimate=2.5),
        )
        assert lambda_of(k3) == 2.5
