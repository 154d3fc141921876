"""Rectangular Schur polynomials and their match with the reduced determinant.

For multiplicity vectors of the shape (m1, m2, 1, ..., 1) the condition
matrix is a Vandermonde matrix with a single gap in the column degrees, so
the reduced determinant is (up to sign) the Schur polynomial of a
rectangular partition.  The Schur polynomial is computed as the quotient of
two alternants, which stays inside integer arithmetic and reuses the exact
determinant and division kernels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra.matrices import RingMatrix, det_fraction_free
from .algebra.multipoly import MultiPoly
from .degeneracy import reduced_det
from .divisor import MultiplicityVector
from .errors import InputError


@dataclass(frozen=True)
class RectPartition:
    """A rectangle with ``height`` rows of length ``base``, in ``nvars`` variables."""

    base: int
    height: int
    nvars: int

    def __post_init__(self):
        if self.base < 1 or self.height < 1 or self.nvars < 1:
            raise InputError(
                f"base, height and nvars must be positive: {self.base}, "
                f"{self.height}, {self.nvars}"
            )
        if self.height > self.nvars:
            raise InputError(
                f"height {self.height} exceeds the number of variables {self.nvars}"
            )

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return (self.base,) * self.height + (0,) * (self.nvars - self.height)


def _alternant(nvars: int, exponents: list[int]) -> MultiPoly:
    rows = []
    for i in range(nvars):
        row = []
        for e in exponents:
            exps = [0] * nvars
            exps[i] = e
            row.append(MultiPoly.monomial(nvars, exps, 1))
        rows.append(row)
    return det_fraction_free(RingMatrix.from_rows(rows))


def schur_rectangular(partition: RectPartition) -> MultiPoly:
    """The Schur polynomial as a quotient of alternants.

    Numerator exponents are row_lengths[j] + nvars - 1 - j, the denominator
    is the Vandermonde alternant; the division is exact and the result is a
    symmetric polynomial with nonnegative coefficients.
    """
    n = partition.nvars
    shifted = [l + n - 1 - j for j, l in enumerate(partition.row_lengths)]
    numerator = _alternant(n, shifted)
    vandermonde = _alternant(n, list(range(n - 1, -1, -1)))
    return numerator.exact_divide(vandermonde)


@dataclass(frozen=True)
class SchurIdentityResult:
    match: bool
    sign: int  # +1 or -1 when matched, 0 otherwise
    base: int
    height: int
    d1: MultiPoly
    schur: MultiPoly


def schur_identity_check(mult: MultiplicityVector) -> SchurIdentityResult:
    """Is the reduced determinant +/- the rectangular Schur polynomial?

    Applies to vectors (m1, m2, 1, ..., 1) with even total and
    m1 - m2 < n - 2 < m1 + m2 (both strict).  The rectangle has base
    (m1 + m2 - n)/2 and height (m2 - m1 + n - 2)/2; a base of 0 means the
    empty partition, whose Schur polynomial is 1.
    """
    m = mult.entries
    n = mult.n
    if n < 3 or any(v != 1 for v in m[2:]):
        raise InputError(f"expected shape (m1, m2, 1, ..., 1), got {mult}")
    if mult.total % 2:
        raise InputError(f"total multiplicity {mult.total} is odd")
    if not (m[0] - m[1] < n - 2 < m[0] + m[1]):
        raise InputError(
            f"need m1 - m2 < n - 2 < m1 + m2 strictly; "
            f"got {m[0] - m[1]} vs {n - 2} vs {m[0] + m[1]}"
        )
    base = (m[0] + m[1] - n) // 2
    height = (m[1] - m[0] + n - 2) // 2
    nvars = n - 2
    if base == 0:
        schur = MultiPoly.one(nvars)
    else:
        schur = schur_rectangular(RectPartition(base=base, height=height, nvars=nvars))
    d1 = reduced_det(mult)
    if d1 == schur:
        sign = 1
    elif d1 == -schur:
        sign = -1
    else:
        sign = 0
    return SchurIdentityResult(
        match=sign != 0, sign=sign, base=base, height=height, d1=d1, schur=schur
    )
