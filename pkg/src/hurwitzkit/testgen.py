"""Ground-truth instance generation for exercising the classifiers.

Roots are drawn as exact rationals with real parts bounded away from the
imaginary axis (|Re| >= 1/8), so half-plane membership is known by
construction and never inferred numerically.  Conjugate pairs are stored as
the rational data of their quadratic factor, (real part, squared modulus),
which keeps every coefficient rational while still pinning the sign of the
real part.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Polynomial, gcd


class Tamper(enum.Enum):
    NONE = "none"
    FLIP_NUMERATOR_ROOT = "flip-numerator-root"
    FLIP_DENOMINATOR_ROOT = "flip-denominator-root"


@dataclass(frozen=True)
class QuadraticPair:
    """A conjugate root pair re +/- i*im, stored as (re, re^2 + im^2)."""

    real: Fraction
    modulus_sq: Fraction

    def __post_init__(self) -> None:
        if self.modulus_sq <= self.real ** 2:
            raise ValueError("squared modulus must exceed squared real part (im != 0)")

    @property
    def factor(self) -> Polynomial:
        # z^2 - 2*re*z + (re^2 + im^2)
        return Polynomial((Fraction(1), -2 * self.real, self.modulus_sq))


@dataclass(frozen=True)
class RootSpec:
    """Exact root data of a real polynomial with positive leading coefficient."""

    real_roots: tuple[Fraction, ...]
    complex_pairs: tuple[QuadraticPair, ...]
    leading: Fraction

    def __post_init__(self) -> None:
        if self.leading <= 0:
            raise ValueError("leading coefficient must be positive")

    @property
    def degree(self) -> int:
        return len(self.real_roots) + 2 * len(self.complex_pairs)

    def real_parts(self) -> tuple[Fraction, ...]:
        return self.real_roots + tuple(pair.real for pair in self.complex_pairs)


def polynomial_from_roots(spec: RootSpec) -> Polynomial:
    """Expand leading * prod(z - r) * prod(quadratic factors) exactly."""
    if spec.degree < 1:
        raise ValueError("degree must be at least 1")
    acc = Polynomial.constant(spec.leading)
    for root in spec.real_roots:
        acc = acc * Polynomial((Fraction(1), -root))
    for pair in spec.complex_pairs:
        acc = acc * pair.factor
    return acc


def _spec_polynomial(spec: RootSpec) -> Polynomial:
    if spec.degree == 0:
        return Polynomial.constant(spec.leading)
    return polynomial_from_roots(spec)


def _draw_positive(rng: random.Random) -> Fraction:
    # numerator 1..16 over denominator 1..8 keeps |value| in [1/8, 16]
    return Fraction(rng.randint(1, 16), rng.randint(1, 8))


def draw_root_spec(rng: random.Random, degree: int, side: str) -> RootSpec:
    """Draw a RootSpec whose root real parts lie on the requested side.

    ``side`` is "left" (all real parts negative), "right" (all positive), or
    "mixed" (each root's side tossed independently).
    """
    if side not in ("left", "right", "mixed"):
        raise ValueError(f"unknown side {side!r}")
    pairs = rng.randint(0, degree // 2)
    reals = degree - 2 * pairs

    def draw_real_part() -> Fraction:
        value = _draw_positive(rng)
        if side == "left" or (side == "mixed" and rng.randint(0, 1)):
            return -value
        return value

    real_roots = tuple(draw_real_part() for _ in range(reals))
    complex_pairs = []
    for _ in range(pairs):
        real = draw_real_part()
        complex_pairs.append(QuadraticPair(real, real ** 2 + _draw_positive(rng)))
    return RootSpec(real_roots, tuple(complex_pairs), _draw_positive(rng))


def _flip_one_root(rng: random.Random, spec: RootSpec) -> RootSpec:
    total = len(spec.real_roots) + len(spec.complex_pairs)
    if total == 0:
        raise ValueError("cannot tamper a constant factor")
    pick = rng.randrange(total)
    if pick < len(spec.real_roots):
        real_roots = list(spec.real_roots)
        real_roots[pick] = -real_roots[pick]
        return RootSpec(tuple(real_roots), spec.complex_pairs, spec.leading)
    pairs = list(spec.complex_pairs)
    idx = pick - len(spec.real_roots)
    pairs[idx] = QuadraticPair(-pairs[idx].real, pairs[idx].modulus_sq)
    return RootSpec(spec.real_roots, tuple(pairs), spec.leading)


@dataclass(frozen=True)
class GeneratedInstance:
    """A numerator/denominator pair with its constructing root data."""

    seed: int
    tamper: Tamper
    numerator_spec: RootSpec
    denominator_spec: RootSpec
    numerator: Polynomial
    denominator: Polynomial


def generate_instance(
    seed: int,
    numerator_degree: int,
    denominator_degree: int,
    tamper: Tamper = Tamper.NONE,
) -> GeneratedInstance:
    """Draw a coprime pair with known root placement.

    Untampered instances put every numerator root strictly left of the
    imaginary axis and every denominator root strictly right, so the pair is
    Hurwitz by construction.  A tamper negates the real part of exactly one
    root of the named factor.  Shared factors (possible only after
    tampering) are resolved by redrawing, which preserves the degrees.
    """
    if numerator_degree + denominator_degree < 1:
        raise ValueError("combined degree must be at least 1")
    if numerator_degree < 0 or denominator_degree < 0:
        raise ValueError("degrees must be nonnegative")
    if tamper is Tamper.FLIP_NUMERATOR_ROOT and numerator_degree == 0:
        raise ValueError("cannot tamper a constant factor")
    if tamper is Tamper.FLIP_DENOMINATOR_ROOT and denominator_degree == 0:
        raise ValueError("cannot tamper a constant factor")
    rng = random.Random(seed)
    while True:
        num_spec = draw_root_spec(rng, numerator_degree, "left")
        den_spec = draw_root_spec(rng, denominator_degree, "right")
        if tamper is Tamper.FLIP_NUMERATOR_ROOT:
            num_spec = _flip_one_root(rng, num_spec)
        elif tamper is Tamper.FLIP_DENOMINATOR_ROOT:
            den_spec = _flip_one_root(rng, den_spec)
        numerator = _spec_polynomial(num_spec)
        denominator = _spec_polynomial(den_spec)
        if gcd(numerator, denominator).degree == 0:
            return GeneratedInstance(seed, tamper, num_spec, den_spec, numerator, denominator)


def truth_verdict(instance: GeneratedInstance) -> bool:
    """Ground truth from the stored root data, with no numerics.

    True iff every numerator root has strictly negative real part and every
    denominator root strictly positive real part (boundary roots would count
    as false, but the generator never places any).
    """
    return all(x < 0 for x in instance.numerator_spec.real_parts()) and all(
        x > 0 for x in instance.denominator_spec.real_parts()
    )
