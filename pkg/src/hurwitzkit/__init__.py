"""Exact-arithmetic Hurwitz stability certification.

Decides whether a real polynomial has all zeroes in the open left half-plane
and whether a real rational function additionally has all poles in the open
right half-plane, using exact rational determinant chains with cross-checked
evidence (expansion minors, Hankel minors of the associated function, and
interleaved coefficient determinants).
"""

from .polynomials import Polynomial, Rational, gcd, parse_rational
from .series import (
    AssociatedSeriesPrefix,
    LaurentPrefix,
    NotCoprimeError,
    RationalFunction,
    UndefinedSeriesError,
    associated_series,
    associated_series_of_rational,
    laurent_expand,
    make_rational_function,
)
from .determinants import (
    SquareMatrix,
    build_hurwitz_matrix,
    build_interleaved_matrix,
    det_bareiss,
    det_laplace,
    hankel_minor,
    hurwitz_minor,
    interleaved_minor,
    shifted_hankel_minor,
)
from .stability import (
    HankelEvidence,
    IdentityRecord,
    IdentityReport,
    SignProbeRecord,
    StabilityReport,
    Verdict,
    auxiliary_polynomial,
    classify_polynomial,
    classify_rational,
    reciprocal_dual,
    stodola_check,
    verify_determinant_identities,
    verify_hankel_relations,
    verify_rational_hankel_relations,
)
from .testgen import (
    GeneratedInstance,
    QuadraticPair,
    RootSpec,
    Tamper,
    draw_root_spec,
    generate_instance,
    polynomial_from_roots,
    truth_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "AssociatedSeriesPrefix",
    "GeneratedInstance",
    "HankelEvidence",
    "IdentityRecord",
    "IdentityReport",
    "LaurentPrefix",
    "NotCoprimeError",
    "Polynomial",
    "QuadraticPair",
    "Rational",
    "RationalFunction",
    "RootSpec",
    "SignProbeRecord",
    "SquareMatrix",
    "StabilityReport",
    "Tamper",
    "UndefinedSeriesError",
    "Verdict",
    "associated_series",
    "associated_series_of_rational",
    "auxiliary_polynomial",
    "build_hurwitz_matrix",
    "build_interleaved_matrix",
    "classify_polynomial",
    "classify_rational",
    "det_bareiss",
    "det_laplace",
    "draw_root_spec",
    "gcd",
    "generate_instance",
    "hankel_minor",
    "hurwitz_minor",
    "interleaved_minor",
    "laurent_expand",
    "make_rational_function",
    "parse_rational",
    "polynomial_from_roots",
    "reciprocal_dual",
    "shifted_hankel_minor",
    "stodola_check",
    "truth_verdict",
    "verify_determinant_identities",
    "verify_hankel_relations",
    "verify_rational_hankel_relations",
]
