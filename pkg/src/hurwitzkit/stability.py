"""Stability classification and cross-family identity verification.

A real polynomial is Hurwitz stable when all of its zeroes lie in the open
left half-plane; a real rational function is Hurwitz when additionally all
of its poles lie in the open right half-plane.  Both properties are decided
here by strict positivity of finitely many exact determinants:

* polynomials: the classical Hurwitz minors of the coefficient sequence;
* rational functions: the same minors applied to the expansion at infinity,
  up to the order (sum of numerator and denominator degrees).

The verdict is decided by that minor chain alone.  Everything else in this
module is evidence: the Hankel-minor criterion on the associated function,
the interleaved coefficient determinants (equal to the minor chain up to a
positive power of the denominator's leading coefficient), the reduction to a
single stability-equivalent polynomial, and the reciprocal dual.  Each
cross-check is exact, so any disagreement is a bug, never a tolerance issue.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .determinants import hankel_minor, hurwitz_minor, interleaved_minor, shifted_hankel_minor
from .polynomials import Polynomial
from .series import (
    AssociatedSeriesPrefix,
    RationalFunction,
    UndefinedSeriesError,
    associated_series,
    associated_series_of_rational,
    laurent_expand,
    make_rational_function,
)


class Verdict(enum.Enum):
    HURWITZ = "Hurwitz"
    NOT_HURWITZ = "NotHurwitz"


@dataclass(frozen=True)
class HankelEvidence:
    """Associated-function data behind the Hankel form of the criterion."""

    constant_term: Fraction
    minors: tuple[Fraction, ...]
    shifted_minors: tuple[Fraction, ...]


@dataclass(frozen=True)
class StabilityReport:
    """Verdict plus the determinant evidence used to reach it.

    ``first_failure`` is the 1-based index of the first non-strictly-positive
    Hurwitz minor, present exactly when the verdict is NOT_HURWITZ.
    """

    verdict: Verdict
    order: int
    hurwitz_minors: tuple[Fraction, ...]
    interleaved_minors: tuple[Fraction, ...] | None = None
    hankel: HankelEvidence | None = None
    first_failure: int | None = None

    @property
    def is_hurwitz(self) -> bool:
        return self.verdict is Verdict.HURWITZ


@dataclass(frozen=True)
class IdentityRecord:
    """One exact left = right comparison; inapplicable records carry no values."""

    name: str
    order: int
    left: Fraction | None
    right: Fraction | None
    passed: bool
    applicable: bool = True


@dataclass(frozen=True)
class SignProbeRecord:
    """Empirical probe of the even-order shifted-Hankel relation.

    Compares the even-index Hurwitz minor of the expansion against the
    shifted Hankel minor scaled by the leading expansion coefficient, both
    with and without an alternating sign.  The probe is informative only
    when the two candidates differ (odd probe order with a nonzero shifted
    minor).
    """

    order: int
    minor: Fraction
    plain: Fraction
    alternating: Fraction

    @property
    def matches_plain(self) -> bool:
        return self.minor == self.plain

    @property
    def matches_alternating(self) -> bool:
        return self.minor == self.alternating

    @property
    def informative(self) -> bool:
        return self.plain != self.alternating


@dataclass(frozen=True)
class IdentityReport:
    """Aggregated identity comparisons plus any sign-convention probes."""

    records: tuple[IdentityRecord, ...]
    probes: tuple[SignProbeRecord, ...] = field(default=())

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records if r.applicable)

    def probe_finding(self) -> str:
        """Summarize which sign convention the informative probes satisfy."""
        informative = [p for p in self.probes if p.informative]
        if not informative:
            return "uninformative"
        alternating = all(p.matches_alternating for p in informative)
        plain = all(p.matches_plain for p in informative)
        if alternating and not plain:
            return "alternating"
        if plain and not alternating:
            return "plain"
        if alternating and plain:
            return "both"
        return "inconsistent"


def _first_failure(minors: tuple[Fraction, ...]) -> int | None:
    for j, value in enumerate(minors, start=1):
        if value <= 0:
            return j
    return None


def _hankel_evidence(series: AssociatedSeriesPrefix, half: int) -> HankelEvidence:
    minors = tuple(hankel_minor(series, j) for j in range(1, half + 1))
    shifted = tuple(shifted_hankel_minor(series, j) for j in range(1, half + 1))
    return HankelEvidence(series.constant_term, minors, shifted)


def _hankel_verdict(evidence: HankelEvidence, order: int) -> bool:
    if order % 2 == 1 and evidence.constant_term <= 0:
        return False
    if any(d <= 0 for d in evidence.minors):
        return False
    return all(
        (value if j % 2 == 0 else -value) > 0
        for j, value in enumerate(evidence.shifted_minors, start=1)
    )


def classify_polynomial(poly: Polynomial) -> StabilityReport:
    """Decide Hurwitz stability of a real polynomial by its Hurwitz minors.

    When the associated-function expansion exists, the Hankel form of the
    criterion is evaluated as well and must agree; the Hankel data is
    attached to the report as evidence.
    """
    if poly.is_zero or poly.degree < 1:
        raise ValueError("degree must be positive")
    normalized, _ = poly.normalize_sign()
    n = normalized.degree
    minors = tuple(hurwitz_minor(normalized.coeffs, j) for j in range(1, n + 1))
    failure = _first_failure(minors)
    verdict = Verdict.HURWITZ if failure is None else Verdict.NOT_HURWITZ

    hankel = None
    half = n // 2
    try:
        series = associated_series(normalized, max(0, 2 * half - 1))
    except UndefinedSeriesError:
        series = None
    if series is not None:
        hankel = _hankel_evidence(series, half)
        if _hankel_verdict(hankel, n) != (verdict is Verdict.HURWITZ):
            raise RuntimeError("internal error: Hurwitz-minor and Hankel criteria disagree")

    return StabilityReport(verdict, n, minors, hankel=hankel, first_failure=failure)


def classify_rational(
    function: RationalFunction,
    include_interleaved: bool = False,
    include_hankel: bool = False,
) -> StabilityReport:
    """Decide Hurwitzness of a rational function by its expansion minors.

    ``include_interleaved`` additionally evaluates the interleaved
    coefficient determinants straight from the numerator/denominator pair
    and checks them against the minor chain; ``include_hankel`` attaches the
    associated-function evidence when it is defined.
    """
    n = function.order
    t = laurent_expand(function, 2 * n - 1)
    minors = tuple(hurwitz_minor(t.coeffs, j) for j in range(1, n + 1))
    failure = _first_failure(minors)
    verdict = Verdict.HURWITZ if failure is None else Verdict.NOT_HURWITZ

    interleaved = None
    if include_interleaved:
        den_lead = function.denominator.leading
        interleaved = tuple(
            interleaved_minor(function.numerator, function.denominator, j)
            for j in range(1, n + 1)
        )
        for j, (section, minor) in enumerate(zip(interleaved, minors), start=1):
            if section != den_lead ** (2 * j) * minor:
                raise RuntimeError("internal error: interleaved chain disagrees with expansion chain")

    hankel = None
    if include_hankel:
        half = n // 2
        try:
            series = associated_series_of_rational(function, max(0, 2 * half - 1))
        except UndefinedSeriesError:
            series = None
        if series is not None:
            hankel = _hankel_evidence(series, half)
            if _hankel_verdict(hankel, n) != (verdict is Verdict.HURWITZ):
                raise RuntimeError("internal error: Hurwitz-minor and Hankel criteria disagree")

    return StabilityReport(
        verdict, n, minors, interleaved_minors=interleaved, hankel=hankel, first_failure=failure
    )


def auxiliary_polynomial(function: RationalFunction) -> Polynomial:
    """The single polynomial whose Hurwitz stability is equivalent to the function's.

    Built as the numerator times the reflected denominator, sign-corrected so
    the leading coefficient stays positive (it equals the product of the two
    leading coefficients).
    """
    product = function.numerator * function.denominator.reflect()
    if function.denominator.degree % 2 == 1:
        product = -product
    return product


def reciprocal_dual(function: RationalFunction) -> RationalFunction:
    """The reflected reciprocal, which is Hurwitz exactly when the input is.

    Numerator and denominator swap roles under z -> -z, with signs chosen so
    both leading coefficients stay positive.  The map is an involution and
    preserves the order.
    """
    num_deg = function.numerator.degree
    den_deg = function.denominator.degree
    new_num = function.denominator.reflect()
    if den_deg % 2 == 1:
        new_num = -new_num
    new_den = function.numerator.reflect()
    if num_deg % 2 == 1:
        new_den = -new_den
    return make_rational_function(new_num, new_den)


def _record(name: str, order: int, left: Fraction, right: Fraction) -> IdentityRecord:
    return IdentityRecord(name, order, left, right, left == right)


def _not_applicable(name: str, order: int) -> IdentityRecord:
    return IdentityRecord(name, order, None, None, True, applicable=False)


def verify_determinant_identities(function: RationalFunction, extra: int = 0) -> IdentityReport:
    """Exact verification of every cross-family determinant identity.

    For each order j up to the function's order n the report compares the
    interleaved section, the expansion minor scaled by the denominator's
    leading coefficient, the auxiliary polynomial's minor, and the dual
    function's minor scaled by the leading expansion coefficient.  For
    j = n+1 .. n+extra it checks that both the expansion minors and the
    interleaved sections vanish identically.
    """
    if extra < 0:
        raise ValueError("extra must be >= 0")
    n = function.order
    den_lead = function.denominator.leading
    t = laurent_expand(function, 2 * (n + extra) - 1)
    t0 = t.coeffs[0]
    aux = auxiliary_polynomial(function)
    dual = reciprocal_dual(function)
    dual_t = laurent_expand(dual, 2 * n - 1)

    records: list[IdentityRecord] = []
    for j in range(1, n + 1):
        minor = hurwitz_minor(t.coeffs, j)
        section = interleaved_minor(function.numerator, function.denominator, j)
        aux_minor = hurwitz_minor(aux.coeffs, j)
        dual_minor = hurwitz_minor(dual_t.coeffs, j)
        dual_section = interleaved_minor(dual.numerator, dual.denominator, j)
        scaled = den_lead ** (2 * j) * minor
        records.append(_record("interleaved_equals_scaled_minor", j, section, scaled))
        records.append(_record("auxiliary_equals_scaled_minor", j, aux_minor, scaled))
        records.append(_record("auxiliary_equals_interleaved", j, aux_minor, section))
        records.append(_record("dual_minor_scaling", j, minor, t0 ** (2 * j) * dual_minor))
        records.append(_record("interleaved_dual_symmetry", j, section, dual_section))
    for j in range(n + 1, n + extra + 1):
        records.append(_record("minor_vanishing", j, hurwitz_minor(t.coeffs, j), Fraction(0)))
        records.append(
            _record(
                "interleaved_vanishing",
                j,
                interleaved_minor(function.numerator, function.denominator, j),
                Fraction(0),
            )
        )
    return IdentityReport(tuple(records))


def verify_hankel_relations(poly: Polynomial) -> IdentityReport:
    """Exact check of the Hurwitz-minor / Hankel-minor relations of a polynomial.

    Even degree n = 2*half relates minor 2j-1 to the plain Hankel minor and
    minor 2j to the alternating shifted one; odd degree works with the ratio
    of the leading coefficient to the expansion's constant term.  Beyond
    ``half`` both Hankel families must vanish.  When the associated series
    does not exist the ratio-based records are reported as not applicable.
    """
    if poly.is_zero or poly.degree < 1:
        raise ValueError("degree must be positive")
    n = poly.degree
    half = n // 2
    lead = poly.leading
    try:
        series = associated_series(poly, 2 * half + 3)
    except UndefinedSeriesError:
        return IdentityReport(
            (
                _not_applicable("hankel_even_index", 0),
                _not_applicable("shifted_hankel_odd_index", 0),
            )
        )

    records: list[IdentityRecord] = []
    if n % 2 == 0:
        for j in range(1, half + 1):
            records.append(
                _record(
                    "hankel_odd_index",
                    j,
                    hurwitz_minor(poly.coeffs, 2 * j - 1),
                    lead ** (2 * j - 1) * hankel_minor(series, j),
                )
            )
            records.append(
                _record(
                    "shifted_hankel_even_index",
                    j,
                    hurwitz_minor(poly.coeffs, 2 * j),
                    (-1) ** j * lead ** (2 * j) * shifted_hankel_minor(series, j),
                )
            )
    else:
        ratio = lead / series.constant_term
        for j in range(half + 1):
            plain = hankel_minor(series, j) if j >= 1 else Fraction(1)
            even_minor = hurwitz_minor(poly.coeffs, 2 * j) if j >= 1 else Fraction(1)
            records.append(_record("hankel_even_index", j, even_minor, ratio ** (2 * j) * plain))
            records.append(
                _record(
                    "shifted_hankel_odd_index",
                    j,
                    hurwitz_minor(poly.coeffs, 2 * j + 1),
                    (-1) ** j * ratio ** (2 * j + 1) * shifted_hankel_minor(series, j),
                )
            )
    for j in (half + 1, half + 2):
        records.append(_record("hankel_vanishing", j, hankel_minor(series, j), Fraction(0)))
        records.append(
            _record("shifted_hankel_vanishing", j, shifted_hankel_minor(series, j), Fraction(0))
        )
    return IdentityReport(tuple(records))


def verify_rational_hankel_relations(function: RationalFunction) -> IdentityReport:
    """Check the expansion-minor / Hankel-minor relations of a rational function.

    The odd-index relation (even order) and both odd-order relations are
    asserted; the even-index relation of even order is probed against both
    sign conventions and reported, never asserted, because the two printed
    forms of that relation disagree and only experiment decides which one
    holds (see :meth:`IdentityReport.probe_finding`).
    """
    n = function.order
    half = n // 2
    try:
        series = associated_series_of_rational(function, max(0, 2 * half - 1))
    except UndefinedSeriesError:
        return IdentityReport(
            (
                _not_applicable("hankel_even_index", 0),
                _not_applicable("shifted_hankel_odd_index", 0),
            )
        )
    t = laurent_expand(function, 2 * n - 1)
    t0 = t.coeffs[0]

    records: list[IdentityRecord] = []
    probes: list[SignProbeRecord] = []
    if n % 2 == 0:
        for j in range(1, half + 1):
            records.append(
                _record(
                    "hankel_odd_index",
                    j,
                    hurwitz_minor(t.coeffs, 2 * j - 1),
                    t0 ** (2 * j - 1) * hankel_minor(series, j),
                )
            )
            plain = t0 ** (2 * j) * shifted_hankel_minor(series, j)
            probes.append(
                SignProbeRecord(j, hurwitz_minor(t.coeffs, 2 * j), plain, (-1) ** j * plain)
            )
    else:
        ratio = t0 / series.constant_term
        for j in range(half + 1):
            plain = hankel_minor(series, j) if j >= 1 else Fraction(1)
            even_minor = hurwitz_minor(t.coeffs, 2 * j) if j >= 1 else Fraction(1)
            records.append(_record("hankel_even_index", j, even_minor, ratio ** (2 * j) * plain))
            records.append(
                _record(
                    "shifted_hankel_odd_index",
                    j,
                    hurwitz_minor(t.coeffs, 2 * j + 1),
                    (-1) ** j * ratio ** (2 * j + 1) * shifted_hankel_minor(series, j),
                )
            )
    return IdentityReport(tuple(records), tuple(probes))


def stodola_check(poly: Polynomial) -> bool:
    """True iff every coefficient is strictly positive.

    Necessary (not sufficient) for Hurwitz stability of a polynomial with
    positive leading coefficient; notably *not* necessary for the expansion
    coefficients of a Hurwitz rational function.
    """
    return all(c > 0 for c in poly.coeffs)
