"""Seeded property suite shared by the CLI selfcheck command and the tests.

Each family runs over the same deterministic stream of generated instances
and reports its failures as reproducible one-line descriptions (seed,
degrees, tamper).  All comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .determinants import (
    build_hurwitz_matrix,
    build_interleaved_matrix,
    det_bareiss,
    det_laplace,
    hurwitz_minor,
    interleaved_minor,
)
from .series import RationalFunction, laurent_expand, make_rational_function
from .stability import (
    Verdict,
    classify_polynomial,
    classify_rational,
    auxiliary_polynomial,
    reciprocal_dual,
    stodola_check,
    verify_determinant_identities,
    verify_hankel_relations,
    verify_rational_hankel_relations,
)
from .testgen import GeneratedInstance, Tamper, generate_instance, truth_verdict

MAX_REPORTED_FAILURES = 5

DEGREE_CYCLE = (
    (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3),
    (3, 2), (2, 3), (3, 3), (4, 2), (2, 4), (4, 3), (3, 4), (4, 4),
    (5, 3), (3, 5), (5, 4), (4, 5), (5, 5), (5, 0), (0, 5), (2, 0),
)

TAMPER_CYCLE = (
    Tamper.NONE,
    Tamper.FLIP_NUMERATOR_ROOT,
    Tamper.NONE,
    Tamper.FLIP_DENOMINATOR_ROOT,
)


@dataclass
class FamilyResult:
    """Outcome of one property family over the instance stream."""

    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message)
        elif len(self.failures) == MAX_REPORTED_FAILURES:
            self.failures.append("... further failures suppressed")

    def summary_line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        tail = f"  [{self.note}]" if self.note else ""
        return f"{status}  {self.name}: {self.cases} cases{tail}"


def instance_stream(cases: int, seed: int) -> list[GeneratedInstance]:
    """Deterministic mix of degrees and tamper modes, ``cases`` instances long."""
    out = []
    for idx in range(cases):
        num_deg, den_deg = DEGREE_CYCLE[idx % len(DEGREE_CYCLE)]
        tamper = TAMPER_CYCLE[idx % len(TAMPER_CYCLE)]
        if tamper is Tamper.FLIP_NUMERATOR_ROOT and num_deg == 0:
            tamper = Tamper.NONE
        if tamper is Tamper.FLIP_DENOMINATOR_ROOT and den_deg == 0:
            tamper = Tamper.NONE
        out.append(generate_instance(seed * 1_000_003 + idx, num_deg, den_deg, tamper))
    return out


def _describe(instance: GeneratedInstance) -> str:
    return (
        f"seed={instance.seed} degrees={instance.numerator_spec.degree}/"
        f"{instance.denominator_spec.degree} tamper={instance.tamper.value}"
    )


def _function_of(instance: GeneratedInstance) -> RationalFunction:
    return make_rational_function(instance.numerator, instance.denominator)


def check_oracle_agreement(instances: list[GeneratedInstance]) -> FamilyResult:
    """Classifier verdict equals the by-construction ground truth on every instance."""
    result = FamilyResult("oracle-agreement")
    for instance in instances:
        result.cases += 1
        function = _function_of(instance)
        verdict = classify_rational(function).is_hurwitz
        if verdict != truth_verdict(instance):
            result.fail(f"verdict {verdict} != truth on {_describe(instance)}")
    return result


def check_identity_suite(instances: list[GeneratedInstance], extra: int = 2) -> FamilyResult:
    """All determinant identities hold exactly, cross-checked by the cofactor oracle."""
    result = FamilyResult("identity-suite")
    for instance in instances:
        result.cases += 1
        function = _function_of(instance)
        report = verify_determinant_identities(function, extra=extra)
        if not report.all_passed:
            bad = [r.name for r in report.records if r.applicable and not r.passed]
            result.fail(f"{bad[:3]} on {_describe(instance)}")
            continue
        n = function.order
        t = laurent_expand(function, 2 * n - 1)
        for j in range(1, min(n, 8) + 1):
            section = build_hurwitz_matrix(t.coeffs, j)
            if det_bareiss(section) != det_laplace(section):
                result.fail(f"cofactor oracle mismatch (minor {j}) on {_describe(instance)}")
        for j in range(1, n + 1):
            if 2 * j > 8:
                break
            grid = build_interleaved_matrix(function.numerator, function.denominator, j)
            if det_bareiss(grid) != det_laplace(grid):
                result.fail(f"cofactor oracle mismatch (interleaved {j}) on {_describe(instance)}")
    return result


def check_hankel_relations(instances: list[GeneratedInstance]) -> tuple[FamilyResult, str]:
    """Polynomial and rational Hankel relations, criterion equivalence, Stodola necessity.

    Returns the family result together with the aggregated sign-probe finding.
    """
    result = FamilyResult("hankel-relations")
    findings: set[str] = set()
    for instance in instances:
        result.cases += 1
        function = _function_of(instance)
        aux = auxiliary_polynomial(function)

        poly_report = verify_hankel_relations(aux)
        if not poly_report.all_passed:
            bad = [r.name for r in poly_report.records if r.applicable and not r.passed]
            result.fail(f"polynomial relations {bad[:3]} on {_describe(instance)}")

        # classify_polynomial re-derives the Hankel verdict internally and
        # raises if the two criteria ever disagree
        try:
            poly_verdict = classify_polynomial(aux).is_hurwitz
        except RuntimeError as exc:
            result.fail(f"{exc} on {_describe(instance)}")
            continue
        if poly_verdict and not stodola_check(aux):
            result.fail(f"stable polynomial with non-positive coefficient on {_describe(instance)}")
        if poly_verdict != classify_rational(function).is_hurwitz:
            result.fail(f"reduction mismatch on {_describe(instance)}")

        rational_report = verify_rational_hankel_relations(function)
        if not rational_report.all_passed:
            bad = [r.name for r in rational_report.records if r.applicable and not r.passed]
            result.fail(f"rational relations {bad[:3]} on {_describe(instance)}")
        finding = rational_report.probe_finding()
        if finding not in ("uninformative",):
            findings.add(finding)
    if "inconsistent" in findings or len(findings) > 1:
        result.fail(f"sign probe inconsistent across instances: {sorted(findings)}")
        overall = "inconsistent"
    else:
        overall = findings.pop() if findings else "uninformative"
    result.note = f"even-order sign probe: {overall} convention"
    return result, overall


def check_vanishing(instances: list[GeneratedInstance], extra: int = 3) -> FamilyResult:
    """Expansion minors and interleaved sections vanish beyond the order."""
    result = FamilyResult("vanishing")
    for instance in instances:
        result.cases += 1
        function = _function_of(instance)
        n = function.order
        t = laurent_expand(function, 2 * (n + extra) - 1)
        for j in range(n + 1, n + extra + 1):
            if hurwitz_minor(t.coeffs, j) != 0:
                result.fail(f"expansion minor {j} nonzero on {_describe(instance)}")
            if interleaved_minor(function.numerator, function.denominator, j) != 0:
                result.fail(f"interleaved section {j} nonzero on {_describe(instance)}")
    return result


def check_duality(instances: list[GeneratedInstance]) -> FamilyResult:
    """The reflected reciprocal preserves the verdict and is an involution."""
    result = FamilyResult("duality")
    for instance in instances:
        result.cases += 1
        function = _function_of(instance)
        dual = reciprocal_dual(function)
        if classify_rational(function).verdict != classify_rational(dual).verdict:
            result.fail(f"dual verdict differs on {_describe(instance)}")
        again = reciprocal_dual(dual)
        if again.numerator != function.numerator or again.denominator != function.denominator:
            result.fail(f"dual not an involution on {_describe(instance)}")
    return result


def check_scaling(instances: list[GeneratedInstance]) -> FamilyResult:
    """Positive scaling of the factors scales each minor by (num/den factor)^j.

    The verdict is therefore scaling-invariant.
    """
    scales = (
        (Fraction(3), Fraction(1)),
        (Fraction(1, 2), Fraction(5)),
        (Fraction(7, 3), Fraction(2, 5)),
    )
    result = FamilyResult("scaling")
    for idx, instance in enumerate(instances):
        result.cases += 1
        function = _function_of(instance)
        num_scale, den_scale = scales[idx % len(scales)]
        scaled = make_rational_function(
            function.numerator * num_scale, function.denominator * den_scale
        )
        base = classify_rational(function)
        moved = classify_rational(scaled)
        if base.verdict != moved.verdict:
            result.fail(f"verdict changed under scaling on {_describe(instance)}")
            continue
        ratio = num_scale / den_scale
        for j, (before, after) in enumerate(
            zip(base.hurwitz_minors, moved.hurwitz_minors), start=1
        ):
            if after != ratio ** j * before:
                result.fail(f"minor {j} scaled wrongly on {_describe(instance)}")
                break
    return result


def run_selfcheck(cases: int, seed: int) -> tuple[list[FamilyResult], str]:
    """Run every property family over one shared instance stream.

    Returns the family results and the aggregated sign-probe finding.
    """
    instances = instance_stream(cases, seed)
    results = [
        check_oracle_agreement(instances),
        check_identity_suite(instances),
    ]
    hankel_result, finding = check_hankel_relations(instances)
    results.append(hankel_result)
    results.append(check_vanishing(instances))
    results.append(check_duality(instances))
    results.append(check_scaling(instances))
    return results, finding
