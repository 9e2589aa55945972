"""Exact root work on rational polynomials: isolation, signs at surds, comparisons.

Nothing in this module uses floating point except the final conversion of an
isolating interval's midpoint in largest_real_root.
"""

import logging
from fractions import Fraction
from math import isqrt

import sympy
from sympy import Poly, Rational

from ..exceptions import PolynomialDomainError, SurdError
from ..models import QuadraticSurd
from .quotient import X

logger = logging.getLogger(__name__)

_ROOT_PRECISION = Rational(1, 10**12)
_MAX_REFINEMENTS = 200

Point = int | Fraction | QuadraticSurd


def as_poly(expr: sympy.Expr | Poly) -> Poly:
    """Coerce an expression in x to a Poly over QQ."""
    if isinstance(expr, Poly):
        return expr if expr.get_domain().is_QQ else Poly(expr.as_expr(), X, domain="QQ")
    return Poly(expr, X, domain="QQ")


def _fraction(c: sympy.Rational) -> Fraction:
    r = Rational(c)
    return Fraction(int(r.p), int(r.q))


def _square_root(q: Fraction) -> Fraction | None:
    """Exact rational square root of a non-negative rational, if there is one."""
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def surd(a: Fraction | int = 0, b: Fraction | int = 0, c: Fraction | int = 0) -> QuadraticSurd:
    """Build a + b*sqrt(c), folding a rational root into a.

    Raises:
        SurdError: If c is negative
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c < 0:
        raise SurdError(f"radicand must be non-negative, got {c}")
    root = _square_root(c)
    if root is not None:
        return QuadraticSurd(a=a + b * root, b=Fraction(0), c=Fraction(0))
    return QuadraticSurd(a=a, b=b, c=c)


def _normalize(point: Point) -> QuadraticSurd:
    if isinstance(point, QuadraticSurd):
        return surd(point.a, point.b, point.c)
    return surd(Fraction(point))


def _surd_sign(a: Fraction, b: Fraction, c: Fraction) -> int:
    """Sign of a + b*sqrt(c) with c >= 0."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0 or c == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    lhs, rhs = a * a, b * b * c
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


def evaluate_at(p: Poly, point: Point) -> QuadraticSurd:
    """Exact value of p at a rational or quadratic-surd point, by surd Horner."""
    z = _normalize(point)
    a, b, c = Fraction(0), Fraction(0), z.c
    for coeff in as_poly(p).all_coeffs():
        # (a + b r)(za + zb r) + coeff with r^2 = c
        a, b = a * z.a + b * z.b * c + _fraction(coeff), a * z.b + b * z.a
    return QuadraticSurd(a=a, b=b, c=c)


def sign_at(p: Poly, point: Point) -> int:
    """Exact sign (-1, 0, 1) of p at a rational or a + b*sqrt(c).

    Raises:
        SurdError: If the point is a surd with negative radicand
    """
    value = evaluate_at(p, point)
    return _surd_sign(value.a, value.b, value.c)


def sign_at_infinity(p: Poly, positive: bool = True) -> int:
    p = as_poly(p)
    if p.is_zero:
        return 0
    lead = p.LC()
    s = 1 if lead > 0 else -1
    if not positive and p.degree() % 2:
        s = -s
    return s


def _minimal_poly(point: QuadraticSurd) -> Poly:
    if point.b == 0 or point.c == 0:
        return as_poly(X - Rational(point.a.numerator, point.a.denominator))
    a = Rational(point.a.numerator, point.a.denominator)
    b2c = Rational((point.b * point.b * point.c).numerator, (point.b * point.b * point.c).denominator)
    return as_poly((X - a) ** 2 - b2c)


def _sign_changes(signs: list[int]) -> int:
    nonzero = [s for s in signs if s]
    return sum(1 for u, v in zip(nonzero, nonzero[1:]) if u != v)


def count_roots_above(p: Poly, point: Point) -> int:
    """Number of distinct real roots of p strictly greater than point (Sturm).

    Raises:
        PolynomialDomainError: For the zero polynomial
    """
    p = as_poly(p)
    if p.is_zero:
        raise PolynomialDomainError("the zero polynomial has no isolated roots")
    z = _normalize(point)
    p = p.sqf_part()
    if sign_at(p, z) == 0:
        # drop the factor vanishing at the point so Sturm's count applies
        p = p.quo(p.gcd(_minimal_poly(z)))
    if p.degree() <= 0:
        return 0
    chain = [as_poly(q) for q in sympy.sturm(p)]
    at_point = _sign_changes([sign_at(q, z) for q in chain])
    at_infinity = _sign_changes([sign_at_infinity(q) for q in chain])
    return at_point - at_infinity


def _isolating_intervals(p: Poly) -> list[tuple[Rational, Rational]]:
    return [interval for interval, _ in p.intervals()]


def _largest_isolated(p: Poly) -> tuple[Poly, Rational, Rational]:
    p = as_poly(p)
    if p.is_zero:
        raise PolynomialDomainError("the zero polynomial has no largest root")
    sqf = p.sqf_part()
    intervals = _isolating_intervals(sqf) if sqf.degree() > 0 else []
    if not intervals:
        raise PolynomialDomainError(f"{p.as_expr()} has no real root")
    lo, hi = intervals[-1]
    return sqf, Rational(lo), Rational(hi)


def _refine(p: Poly, lo: Rational, hi: Rational, eps: Rational) -> tuple[Rational, Rational]:
    if lo == hi:
        return lo, hi
    lo, hi = p.refine_root(lo, hi, eps=eps)
    return Rational(lo), Rational(hi)


def largest_real_root(
    p: Poly, bracket: tuple[float, float] | None = None
) -> float:
    """Largest real root, isolated exactly and refined to 1e-12.

    Args:
        p: Polynomial in x over QQ
        bracket: Optional (lo, hi); only roots inside it are considered

    Returns:
        The root as a float

    Raises:
        PolynomialDomainError: If p is zero or has no real root (in the bracket)
    """
    if bracket is None:
        sqf, lo, hi = _largest_isolated(p)
    else:
        sqf = as_poly(p)
        if sqf.is_zero:
            raise PolynomialDomainError("the zero polynomial has no largest root")
        sqf = sqf.sqf_part()
        inside = [
            iv for iv, _ in sqf.intervals(inf=Rational(bracket[0]), sup=Rational(bracket[1]))
        ] if sqf.degree() > 0 else []
        if not inside:
            raise PolynomialDomainError(f"no real root of {p.as_expr()} in {bracket}")
        lo, hi = (Rational(v) for v in inside[-1])
    lo, hi = _refine(sqf, lo, hi, _ROOT_PRECISION)
    return float((lo + hi) / 2)


def _order_distinct(
    p: Poly, p_iv: tuple[Rational, Rational], q: Poly, q_iv: tuple[Rational, Rational]
) -> int:
    """Order two roots known to be distinct by refining isolating intervals."""
    (a1, b1), (a2, b2) = p_iv, q_iv
    for _ in range(_MAX_REFINEMENTS):
        if b1 < a2:
            return -1
        if b2 < a1:
            return 1
        a1, b1 = _refine(p, a1, b1, max((b1 - a1) / 4, Rational(1, 10**300)))
        a2, b2 = _refine(q, a2, b2, max((b2 - a2) / 4, Rational(1, 10**300)))
    raise PolynomialDomainError("isolating intervals failed to separate distinct roots")


def _largest_is_common(sqf: Poly, common: Poly, top: tuple[Rational, Rational]) -> bool:
    """Whether the largest root of sqf equals the largest root of common, a factor of it."""
    rest = sqf.quo(common)
    if rest.degree() <= 0 or not _isolating_intervals(rest):
        return True
    _, lo, hi = _largest_isolated(rest)
    return _order_distinct(rest, (lo, hi), common, top) < 0


def compare_largest_roots(p: Poly, q: Poly) -> int:
    """Exact sign of (largest root of p) - (largest root of q).

    Raises:
        PolynomialDomainError: If either polynomial is zero or has no real root
    """
    sp_, p_lo, p_hi = _largest_isolated(p)
    sq_, q_lo, q_hi = _largest_isolated(q)
    common = sp_.gcd(sq_)
    if common.degree() > 0 and _isolating_intervals(common):
        _, c_lo, c_hi = _largest_isolated(common)
        p_common = _largest_is_common(sp_, common, (c_lo, c_hi))
        q_common = _largest_is_common(sq_, common, (c_lo, c_hi))
        if p_common and q_common:
            return 0
        if p_common:
            return -1
        if q_common:
            return 1
        sp_, sq_ = sp_.quo(common), sq_.quo(common)
        _, p_lo, p_hi = _largest_isolated(sp_)
        _, q_lo, q_hi = _largest_isolated(sq_)
    return _order_distinct(sp_, (p_lo, p_hi), sq_, (q_lo, q_hi))


def largest_root_vs(p: Poly, point: Point) -> int:
    """Exact sign of (largest root of p) - point.

    Raises:
        PolynomialDomainError: If p has no real root
    """
    _largest_isolated(p)
    if count_roots_above(p, point) > 0:
        return 1
    return 0 if sign_at(p, point) == 0 else -1


def root_below(p: Poly, x0: Point, bracket: tuple[Fraction | int, Fraction | int]) -> bool:
    """Certify that the largest root of p lies strictly below x0.

    p must have exactly one root in the closed bracket, be increasing there
    (no root of p' inside and p'(lo) > 0), have no root above the bracket, and
    satisfy p(x0) > 0 with x0 inside the bracket.
    """
    p = as_poly(p)
    lo, hi = Fraction(bracket[0]), Fraction(bracket[1])
    z = _normalize(x0)
    value = float(z.a) + float(z.b) * float(z.c) ** 0.5
    if not (float(lo) <= value <= float(hi)):
        return False
    lo_r, hi_r = Rational(lo.numerator, lo.denominator), Rational(hi.numerator, hi.denominator)
    if p.count_roots(lo_r, hi_r) != 1 or count_roots_above(p, hi) != 0:
        return False
    dp = p.diff(X)
    if dp.count_roots(lo_r, hi_r) != 0 or sign_at(dp, lo) <= 0:
        return False
    return sign_at(p, z) > 0
