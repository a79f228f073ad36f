"""Rational functions and their exact expansions at infinity.

A validated rational function is a coprime pair of nonzero polynomials, each
sign-normalized so its leading coefficient is positive.  Its expansion at
infinity,

    numerator/denominator = t_0*z^e + t_1*z^(e-1) + t_2*z^(e-2) + ...,

with e = deg numerator - deg denominator, is produced coefficient by
coefficient from the convolution identity obtained by multiplying back with
the denominator:

    num_k = sum_{i=0..k} den_{k-i} * t_i,   so
    t_k   = (num_k - sum_{i=1..k} den_i * t_{k-i}) / den_0,

where coefficients beyond a polynomial's degree are zero.  The same
recurrence, applied to the odd/even coefficient parts, yields the expansion
of the associated function (the ratio odd part / even part in the variable
u = z^2) that drives the Hankel-minor stability test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Polynomial, gcd


class NotCoprimeError(ValueError):
    """Numerator and denominator share a nonconstant factor."""


class UndefinedSeriesError(ValueError):
    """The requested expansion does not exist (leading denominator term vanishes)."""


@dataclass(frozen=True)
class RationalFunction:
    """Coprime, sign-normalized quotient of two nonzero real polynomials.

    The ``order`` (sum of the two degrees) bounds how many leading principal
    minors of the expansion's Hurwitz matrix can be nonzero.
    """

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self) -> None:
        if self.numerator.is_zero or self.denominator.is_zero:
            raise ValueError("numerator and denominator must be nonzero")
        if self.numerator.leading <= 0 or self.denominator.leading <= 0:
            raise ValueError("leading coefficients must be positive; use make_rational_function")
        if gcd(self.numerator, self.denominator).degree > 0:
            raise NotCoprimeError("numerator and denominator not coprime")
        if self.order == 0:
            raise ValueError("order zero: both factors constant")

    @property
    def order(self) -> int:
        return self.numerator.degree + self.denominator.degree

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def make_rational_function(
    numerator: Polynomial,
    denominator: Polynomial,
    auto_reduce: bool = False,
) -> RationalFunction:
    """Validate and normalize a quotient of polynomials.

    Each factor is sign-normalized independently.  A shared nonconstant
    factor raises :class:`NotCoprimeError` unless ``auto_reduce`` is set, in
    which case both factors are divided by their monic gcd first.
    """
    if numerator.is_zero or denominator.is_zero:
        raise ValueError("numerator and denominator must be nonzero")
    num, _ = numerator.normalize_sign()
    den, _ = denominator.normalize_sign()
    common = gcd(num, den)
    if common.degree > 0:
        if not auto_reduce:
            raise NotCoprimeError("numerator and denominator not coprime")
        num_q, num_r = num.divide(common)
        den_q, den_r = den.divide(common)
        if not (num_r.is_zero and den_r.is_zero):
            raise ArithmeticError("gcd division left a remainder")
        num, den = num_q, den_q
    return RationalFunction(num, den)


@dataclass(frozen=True)
class LaurentPrefix:
    """Finite prefix of an expansion at infinity.

    ``coeffs[k]`` is the coefficient of z^(leading_exponent - k).
    """

    leading_exponent: int
    coeffs: tuple[Fraction, ...]


@dataclass(frozen=True)
class AssociatedSeriesPrefix:
    """Prefix of the associated function's expansion at infinity.

    ``constant_term`` is the u^0 term (nonzero exactly when the odd and even
    parts have equal degree); ``coeffs[k]`` is the coefficient of u^-(k+1).
    """

    constant_term: Fraction
    coeffs: tuple[Fraction, ...]


def _quotient_series(numerator: Polynomial, denominator: Polynomial, count: int) -> list[Fraction]:
    """First ``count`` expansion coefficients of numerator/denominator at infinity."""
    lead = denominator.coeffs[0]
    out: list[Fraction] = []
    for k in range(count):
        acc = numerator.coefficient(k)
        for i in range(1, k + 1):
            den_i = denominator.coefficient(i)
            if den_i:
                acc -= den_i * out[k - i]
        out.append(acc / lead)
    return out


def _power_series_divide(
    numerator: list[Fraction], denominator: list[Fraction], count: int
) -> list[Fraction]:
    """Formal power-series quotient to ``count`` terms; denominator[0] must be nonzero."""
    lead = denominator[0]
    out: list[Fraction] = []
    for k in range(count):
        acc = numerator[k] if k < len(numerator) else Fraction(0)
        for i in range(1, k + 1):
            den_i = denominator[i] if i < len(denominator) else Fraction(0)
            if den_i:
                acc -= den_i * out[k - i]
        out.append(acc / lead)
    return out


def laurent_expand(function: RationalFunction, depth: int) -> LaurentPrefix:
    """Expansion coefficients t_0..t_depth of the function at infinity."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    coeffs = _quotient_series(function.numerator, function.denominator, depth + 1)
    return LaurentPrefix(
        function.numerator.degree - function.denominator.degree,
        tuple(coeffs),
    )


def associated_series(poly: Polynomial, depth: int) -> AssociatedSeriesPrefix:
    """Expansion of the ratio odd part / even part of ``poly`` in u = z^2.

    Defined when the even part's degree is at least the odd part's; for an
    odd-degree polynomial that fails exactly when the second coefficient is
    zero, and such inputs raise :class:`UndefinedSeriesError`.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if poly.is_zero:
        raise ValueError("zero polynomial has no associated series")
    even, odd = poly.even_odd_split()
    if odd.is_zero:
        return AssociatedSeriesPrefix(Fraction(0), (Fraction(0),) * (depth + 1))
    if even.is_zero or even.degree < odd.degree:
        raise UndefinedSeriesError("associated function has a polynomial part of positive degree")
    gap = even.degree - odd.degree
    raw = _quotient_series(odd, even, max(0, depth + 2 - gap))
    constant = raw[0] if gap == 0 else Fraction(0)
    coeffs = []
    for k in range(depth + 1):
        idx = k + 1 - gap
        coeffs.append(raw[idx] if 0 <= idx < len(raw) else Fraction(0))
    return AssociatedSeriesPrefix(constant, tuple(coeffs))


def associated_series_of_rational(function: RationalFunction, depth: int) -> AssociatedSeriesPrefix:
    """Associated-function expansion computed from the function's own t-series.

    Splitting the expansion at infinity into even- and odd-indexed halves
    gives the associated function directly: for even order it is

        (t_1/u + t_3/u^2 + ...) / (t_0 + t_2/u + ...),

    and for odd order

        (t_0 + t_2/u + ...) / (t_1 + t_3/u + ...),

    each divided out as a formal power series in 1/u.  The result agrees term
    by term with :func:`associated_series` applied to the stability-equivalent
    auxiliary polynomial.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    t = laurent_expand(function, 2 * depth + 3).coeffs
    count = depth + 2
    if function.order % 2 == 0:
        num = [Fraction(0)] + [t[2 * k - 1] for k in range(1, count)]
        den = [t[2 * k] for k in range(count)]
    else:
        num = [t[2 * k] for k in range(count)]
        den = [t[2 * k + 1] for k in range(count)]
        if den[0] == 0:
            raise UndefinedSeriesError("associated series undefined at leading order")
    full = _power_series_divide(num, den, count)
    return AssociatedSeriesPrefix(full[0], tuple(full[1:]))
