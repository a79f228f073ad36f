"""Exact dense polynomial arithmetic over the rationals.

Every scalar is a ``fractions.Fraction``; nothing in this module (or in any
module built on it) ever touches floating point.  A polynomial is stored as a
tuple of coefficients in descending powers: ``(a0, a1, ..., an)`` represents
``a0*z^n + a1*z^(n-1) + ... + an``.  The leading coefficient is nonzero except
for the canonical zero polynomial, which is stored as the single entry
``(Fraction(0),)`` with degree 0 and ``is_zero`` set.

All operations are pure and all values immutable, so polynomials can be
shared freely between concurrent tasks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[Fraction, int]

_RATIONAL_TOKEN = re.compile(r"-?\d+(?:/\d+)?")


def parse_rational(token: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional leading minus) into a Fraction.

    Decimal notation is rejected on purpose: the input grammar is exact.
    """
    text = token.strip()
    if not _RATIONAL_TOKEN.fullmatch(text):
        raise ValueError(f"invalid rational token {token!r}")
    if "/" in text:
        num_text, den_text = text.split("/")
        if int(den_text) == 0:
            raise ValueError(f"invalid rational token {token!r} (zero denominator)")
        return Fraction(int(num_text), int(den_text))
    return Fraction(int(text))


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, float):
        raise TypeError("float coefficients are not exact; use Fraction or int")
    return Fraction(value)


@dataclass(frozen=True)
class Polynomial:
    """Dense real polynomial with exact rational coefficients.

    ``coeffs[0]`` is the leading coefficient, ``coeffs[-1]`` the constant
    term.  Construction canonicalizes: leading zeros are stripped and the
    zero polynomial collapses to the single entry ``(0,)``.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cleaned = tuple(_as_fraction(c) for c in self.coeffs)
        drop = 0
        while drop < len(cleaned) - 1 and cleaned[drop] == 0:
            drop += 1
        cleaned = cleaned[drop:]
        if not cleaned:
            cleaned = (Fraction(0),)
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def constant(cls, value: Scalar) -> Polynomial:
        return cls((_as_fraction(value),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    @property
    def leading(self) -> Fraction:
        return self.coeffs[0]

    def coefficient(self, index: int) -> Fraction:
        """Coefficient of z^(degree - index); zero outside the stored range."""
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return Fraction(0)

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at ``x``, accumulated in Horner order."""
        point = _as_fraction(x)
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * point + c
        return acc

    def reflect(self) -> Polynomial:
        """The polynomial q with q(x) = p(-x)."""
        n = self.degree
        return Polynomial(
            tuple(c if (n - i) % 2 == 0 else -c for i, c in enumerate(self.coeffs))
        )

    def scale(self, factor: Scalar) -> Polynomial:
        f = _as_fraction(factor)
        if f == 0:
            return Polynomial.constant(0)
        return Polynomial(tuple(f * c for c in self.coeffs))

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs[::-1], other.coeffs[::-1]
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return Polynomial(tuple(reversed(summed)))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return Polynomial.constant(0)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k, b in enumerate(other.coeffs):
                out[i + k] += a * b
        return Polynomial(tuple(out))

    def __rmul__(self, other: Scalar) -> Polynomial:
        return self.scale(other)

    def divide(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Exact long division: returns (quotient, remainder)."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero or self.degree < divisor.degree:
            return Polynomial.constant(0), self
        rem = list(self.coeffs)
        dq = divisor.degree
        quot = []
        for i in range(len(rem) - dq):
            factor = rem[i] / divisor.coeffs[0]
            quot.append(factor)
            if factor:
                for k in range(dq + 1):
                    rem[i + k] -= factor * divisor.coeffs[k]
        return Polynomial(tuple(quot)), Polynomial(tuple(rem[len(quot):]) or (Fraction(0),))

    def monic(self) -> Polynomial:
        if self.is_zero:
            raise ValueError("zero polynomial has no monic form")
        return self.scale(1 / self.leading)

    def compose(self, inner: Polynomial) -> Polynomial:
        """The polynomial p(inner(z)), expanded exactly (Horner over polynomials)."""
        acc = Polynomial.constant(self.coeffs[0])
        for c in self.coeffs[1:]:
            acc = acc * inner + Polynomial.constant(c)
        return acc

    def even_odd_split(self) -> tuple[Polynomial, Polynomial]:
        """Split p(z) = even(z^2) + z*odd(z^2); both returned in the variable u = z^2."""
        ascending = self.coeffs[::-1]
        even = ascending[0::2]
        odd = ascending[1::2]
        return Polynomial(tuple(reversed(even))), Polynomial(tuple(reversed(odd)) or (Fraction(0),))

    def normalize_sign(self) -> tuple[Polynomial, bool]:
        """Return (p, False) or (-p, True) so the leading coefficient is positive."""
        if self.is_zero:
            raise ValueError("zero polynomial has no sign normalization")
        if self.leading < 0:
            return -self, True
        return self, False

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        n = self.degree
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = n - i
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "z" if power == 1 else f"z^{power}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def gcd(first: Polynomial, second: Polynomial) -> Polynomial:
    """Monic greatest common divisor over the rationals (Euclidean remainders)."""
    if first.is_zero and second.is_zero:
        raise ValueError("undefined gcd")
    a, b = first, second
    while not b.is_zero:
        _, r = a.divide(b)
        a, b = b, r
    return a.monic()


def from_scalars(values: Iterable[Scalar]) -> Polynomial:
    """Convenience constructor from any iterable of ints/Fractions (descending powers)."""
    return Polynomial(tuple(_as_fraction(v) for v in values))
