"""Exact determinant and kernel computations.

Two rings appear in practice: symbolic matrices over :class:`MultiPoly`
(for the degeneration determinant and Schur alternants) and numeric
matrices over :class:`fractions.Fraction` (for the degreewise membership
systems).  Symbolic determinants use plain cofactor expansion up to 4x4 and
fraction-free Bareiss elimination above that; the Bareiss divisions are
exact in the polynomial ring, so no rational functions ever appear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import InputError
from .multipoly import MultiPoly

_COFACTOR_LIMIT = 4


@dataclass(frozen=True)
class RingMatrix:
    """Row-major immutable matrix over MultiPoly or Fraction entries."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RingMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise InputError("ragged rows")
        return cls(r, c, tuple(x for row in rows for x in row))

    def at(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def det_cofactor(matrix: RingMatrix) -> MultiPoly:
    """Determinant by first-row cofactor expansion (oracle-grade, any size)."""
    if not matrix.is_square:
        raise InputError("determinant of a non-square matrix")
    return _det_cofactor_rows(matrix.to_rows(), _zero_like(matrix))


def _zero_like(matrix: RingMatrix):
    for x in matrix.entries:
        if isinstance(x, MultiPoly):
            return MultiPoly.zero(x.nvars)
    return Fraction(0)


def _det_cofactor_rows(rows: list[list], zero):
    n = len(rows)
    if n == 0:
        return zero + _one_of(zero)
    if n == 1:
        return rows[0][0]
    total = zero
    for j in range(n):
        a = rows[0][j]
        if _is_zero(a):
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = a * _det_cofactor_rows(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def _is_zero(x) -> bool:
    return x.is_zero if isinstance(x, MultiPoly) else x == 0


def _one_of(zero):
    return MultiPoly.one(zero.nvars) if isinstance(zero, MultiPoly) else Fraction(1)


def det_fraction_free(matrix: RingMatrix) -> MultiPoly:
    """Exact symbolic determinant over MultiPoly entries.

    Cofactor expansion up to 4x4, Bareiss one-step fraction-free elimination
    above.  Pivots are chosen deterministically (first nonzero in column
    order), and the result is the true determinant either way, so the output
    does not depend on the elimination path.
    """
    if not matrix.is_square:
        raise InputError("determinant of a non-square matrix")
    if matrix.rows == 0:
        raise InputError("determinant of an empty matrix")
    if not isinstance(matrix.entries[0], MultiPoly):
        raise InputError("det_fraction_free expects MultiPoly entries")
    if matrix.rows <= _COFACTOR_LIMIT:
        return det_cofactor(matrix)

    nvars = matrix.entries[0].nvars
    rows = matrix.to_rows()
    n = matrix.rows
    sign = 1
    prev = MultiPoly.one(nvars)
    for k in range(n - 1):
        if rows[k][k].is_zero:
            for r in range(k + 1, n):
                if not rows[r][k].is_zero:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(nvars)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            head = rows[i][k]
            for j in range(k + 1, n):
                num = pivot * rows[i][j] - head * rows[k][j]
                rows[i][j] = num.exact_divide(prev)
            rows[i][k] = MultiPoly.zero(nvars)
        prev = pivot
    result = rows[n - 1][n - 1]
    return result if sign == 1 else -result


def det_rational(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a Fraction matrix by Gaussian elimination."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise InputError("determinant of a non-square matrix")
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if m[r][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        pivot = m[k][k]
        det *= pivot
        for r in range(k + 1, n):
            if m[r][k] == 0:
                continue
            factor = m[r][k] / pivot
            for c in range(k, n):
                m[r][c] -= factor * m[k][c]
    return det


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel, in reduced echelon form.

    ``ncols`` must be given when ``rows`` is empty (an unconstrained system).
    The basis vector for free column f has a 1 in slot f and the negated
    pivot-row entries elsewhere, listed in increasing free-column order, so
    the output is deterministic.
    """
    if rows:
        ncols = len(rows[0])
    elif ncols is None:
        raise InputError("nullspace of an empty system needs an explicit column count")
    reduced, pivots = rref(rows) if rows else ([], [])
    pivot_set = set(pivots)
    basis: list[tuple[Fraction, ...]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][free]
        basis.append(tuple(v))
    return basis


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])
