"""Exact determinant evaluation and the structured minor families.

Three matrix shapes feed the stability criteria, all realized as finite
sections with exact rational entries:

* Hurwitz sections.  For a coefficient (or expansion) sequence ``seq`` the
  j x j section has entry (i, k) = seq[2k - i] with 1-based indices, reading

      seq1  seq3  seq5 ...
      seq0  seq2  seq4 ...
      0     seq1  seq3 ...
      0     seq0  seq2 ...

  Indices outside the supplied list are zero on both sides.

* Hankel sections of an associated-function expansion: entry (i, k) equals
  coefficient ``i + k - 2`` (plain) or ``i + k - 1`` (shifted), 1-based.

* Interleaved sections built straight from a numerator/denominator pair,
  size 2j x 2j.  Row pairs step right: for pair i = 1..j (1-based), row 2i-1
  holds denominator coefficients ``den[k - 2i + 1]`` and row 2i numerator
  coefficients ``num[k - i]``, column k = 1..2j; out-of-range indices are
  zero.  These sections equal ``den_lead^(2j)`` times the corresponding
  Hurwitz minor of the quotient's expansion, which is what makes them a
  stability test that needs no series expansion at all.

The production determinant routine is fraction-free (Bareiss) over a
row-wise integer lift; a memoized cofactor expansion serves as an
independent cross-check oracle for small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .polynomials import Polynomial, Scalar, _as_fraction
from .series import AssociatedSeriesPrefix

LAPLACE_SIZE_LIMIT = 10


@dataclass(frozen=True)
class SquareMatrix:
    """Immutable square grid of exact rationals."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("matrix must have size >= 1")
        size = len(self.rows)
        cleaned = []
        for row in self.rows:
            if len(row) != size:
                raise ValueError("matrix must be square and fully populated")
            cleaned.append(tuple(_as_fraction(x) for x in row))
        object.__setattr__(self, "rows", tuple(cleaned))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> SquareMatrix:
        return cls(tuple(tuple(row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.rows)


def build_hurwitz_matrix(seq: Sequence[Scalar], j: int) -> SquareMatrix:
    """The j x j Hurwitz section of ``seq`` (entry (i,k) = seq[2k-i], 1-based)."""
    if j < 1:
        raise ValueError("minor order must be >= 1")
    values = [_as_fraction(v) for v in seq]

    def at(q: int) -> Fraction:
        return values[q] if 0 <= q < len(values) else Fraction(0)

    return SquareMatrix.from_rows(
        [[at(2 * (k + 1) - (i + 1)) for k in range(j)] for i in range(j)]
    )


def hurwitz_minor(seq: Sequence[Scalar], j: int) -> Fraction:
    """Exact determinant of the j-th Hurwitz section of ``seq``."""
    return det_bareiss(build_hurwitz_matrix(seq, j))


def hankel_minor(series: AssociatedSeriesPrefix, j: int) -> Fraction:
    """Determinant of the j x j Hankel section starting at the first tail coefficient."""
    if j < 1:
        raise ValueError("minor order must be >= 1")
    if len(series.coeffs) < 2 * j - 1:
        raise ValueError("prefix too short")
    rows = [[series.coeffs[i + k] for k in range(j)] for i in range(j)]
    return det_bareiss(SquareMatrix.from_rows(rows))


def shifted_hankel_minor(series: AssociatedSeriesPrefix, j: int) -> Fraction:
    """Determinant of the Hankel section shifted one coefficient deeper; order 0 is 1."""
    if j < 0:
        raise ValueError("minor order must be >= 0")
    if j == 0:
        return Fraction(1)
    if len(series.coeffs) < 2 * j:
        raise ValueError("prefix too short")
    rows = [[series.coeffs[i + k + 1] for k in range(j)] for i in range(j)]
    return det_bareiss(SquareMatrix.from_rows(rows))


def build_interleaved_matrix(numerator: Polynomial, denominator: Polynomial, j: int) -> SquareMatrix:
    """The 2j x 2j interleaved section of a numerator/denominator coefficient pair."""
    if j < 1:
        raise ValueError("minor order must be >= 1")
    rows = []
    for pair in range(j):
        rows.append([denominator.coefficient(k - 2 * pair) for k in range(2 * j)])
        rows.append([numerator.coefficient(k - pair) for k in range(2 * j)])
    return SquareMatrix.from_rows(rows)


def interleaved_minor(numerator: Polynomial, denominator: Polynomial, j: int) -> Fraction:
    """Exact determinant of the j-th interleaved section."""
    return det_bareiss(build_interleaved_matrix(numerator, denominator, j))


def det_bareiss(matrix: SquareMatrix) -> Fraction:
    """Exact determinant via fraction-free elimination on an integer lift.

    Each row is scaled by the lcm of its denominators (tracked and divided
    out at the end), then eliminated with Bareiss pivoting so every
    intermediate value stays an integer of controlled size.
    """
    scale = 1
    rows: list[list[int]] = []
    for row in matrix.rows:
        mult = lcm(*(x.denominator for x in row))
        rows.append([(x * mult).numerator for x in row])
        scale *= mult
    return Fraction(_det_bareiss_int(rows), scale)


def _det_bareiss_int(rows: list[list[int]]) -> int:
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            row_i = rows[i]
            head = row_i[k]
            row_k = rows[k]
            for col in range(k + 1, n):
                row_i[col] = (pivot * row_i[col] - head * row_k[col]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def det_laplace(matrix: SquareMatrix) -> Fraction:
    """Exact determinant by recursive cofactor expansion (cross-check oracle).

    Repeated minors are memoized by their column set, which keeps the
    expansion usable up to the size guard without changing the recurrence.
    """
    if matrix.size > LAPLACE_SIZE_LIMIT:
        raise ValueError("oracle size limit")
    rows = matrix.rows
    size = matrix.size
    memo: dict[tuple[int, ...], Fraction] = {}

    def expand(cols: tuple[int, ...]) -> Fraction:
        if not cols:
            return Fraction(1)
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = size - len(cols)
        total = Fraction(0)
        for pos, col in enumerate(cols):
            entry = rows[row][col]
            if entry == 0:
                continue
            sub = expand(cols[:pos] + cols[pos + 1:])
            total += (entry if pos % 2 == 0 else -entry) * sub
        memo[cols] = total
        return total

    return expand(tuple(range(size)))
