"""The condition matrix for a balanced derivation and its determinant.

For a multiplicity vector with even total 2e + 2, a derivation of degree e
has the shape x^m1*f dx - y^m2*g dy.  The vanishing conditions at the
points z3, ..., zn, written on the coefficients of f and g, form a square
matrix of size m3 + ... + mn whose entries are integer monomials in the
z_i.  Its determinant d vanishes exactly at the configurations where a
degree-e member exists, i.e. where the smaller exponent degenerates below
total/2.

The determinant carries forced factors prod z_k^{m_k} * prod_{j<i}
(z_j - z_i)^{m_i} whose zero loci are not valid configurations; dividing
them out exactly leaves the reduced determinant d1 that actually cuts the
degeneration locus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Sequence

from .algebra.matrices import RingMatrix, det_fraction_free, det_rational
from .algebra.multipoly import MultiPoly
from .algebra.wronskian import falling_factorial
from .divisor import MultiplicityVector, PointDivisor
from .errors import InputError, NotDivisibleError


@dataclass(frozen=True)
class Column:
    """A column of the condition matrix.

    ``kind`` is "f" or "g" for the two coefficient blocks; ``power`` is the
    power of x whose derivatives fill the column (g columns carry one extra
    factor of z); ``degree`` is the degree of the top entry, which is what
    the overlap combinatorics compares.
    """

    kind: str
    power: int

    @property
    def degree(self) -> int:
        return self.power if self.kind == "f" else self.power + 1


@dataclass(frozen=True)
class MatrixLayout:
    """Row and column bookkeeping for the condition matrix."""

    e: int
    mult: MultiplicityVector
    columns: tuple[Column, ...]
    row_blocks: tuple[tuple[int, int], ...]  # (point label i in 3..n, derivative order k)

    @property
    def size(self) -> int:
        return len(self.columns)

    @property
    def f_block_size(self) -> int:
        return sum(1 for c in self.columns if c.kind == "f")

    @property
    def g_block_size(self) -> int:
        return sum(1 for c in self.columns if c.kind == "g")


def _validate(mult: MultiplicityVector) -> int:
    """Check buildability and return e = total/2 - 1."""
    total = mult.total
    if total % 2:
        raise InputError(f"total multiplicity {total} is odd; no balanced matrix exists")
    if mult.n < 3:
        raise InputError("the condition matrix needs at least 3 points")
    e = total // 2 - 1
    if e - mult[0] < 0:
        raise InputError(
            f"m1 = {mult[0]} exceeds {e}: the coefficient block would be empty"
        )
    return e


def layout(mult: MultiplicityVector) -> MatrixLayout:
    e = _validate(mult)
    f_cols = tuple(Column("f", p) for p in range(e, mult[0] - 1, -1))
    g_cols = tuple(Column("g", p) for p in range(e - mult[1], -1, -1))
    rows = tuple(
        (i, k) for i in range(3, mult.n + 1) for k in range(mult[i - 1])
    )
    lay = MatrixLayout(e=e, mult=mult, columns=f_cols + g_cols, row_blocks=rows)
    if lay.size != len(rows):
        raise InputError(
            f"block sizes are inconsistent: {lay.size} columns vs {len(rows)} rows"
        )
    return lay


def _entry_data(column: Column, k: int) -> tuple[int, int]:
    """(coefficient, z-exponent) of the row-k entry in ``column``; coeff 0 kills it."""
    fall = falling_factorial(column.power, k)
    if fall == 0:
        return 0, 0
    exponent = column.power - k + (1 if column.kind == "g" else 0)
    return fall, exponent


def build_condition_matrix(mult: MultiplicityVector) -> tuple[RingMatrix, MatrixLayout]:
    """The symbolic condition matrix, over integers in z3, ..., zn."""
    lay = layout(mult)
    nvars = mult.n - 2
    rows = []
    for i, k in lay.row_blocks:
        var = i - 3
        row = []
        for col in lay.columns:
            coeff, exponent = _entry_data(col, k)
            if coeff == 0:
                row.append(MultiPoly.zero(nvars))
            else:
                exps = [0] * nvars
                exps[var] = exponent
                row.append(MultiPoly.monomial(nvars, exps, coeff))
        rows.append(row)
    return RingMatrix.from_rows(rows), lay


def evaluated_condition_matrix(divisor: PointDivisor) -> list[list[Fraction]]:
    """The condition matrix with the divisor's coordinates substituted."""
    lay = layout(divisor.mult)
    rows = []
    for i, k in lay.row_blocks:
        z = divisor.z[i - 3]
        row = []
        for col in lay.columns:
            coeff, exponent = _entry_data(col, k)
            row.append(Fraction(coeff) * z**exponent if coeff else Fraction(0))
        rows.append(row)
    return rows


def degeneracy_det(mult: MultiplicityVector) -> MultiPoly:
    """The determinant d of the symbolic condition matrix."""
    matrix, _ = build_condition_matrix(mult)
    return det_fraction_free(matrix)


def forced_factors(mult: MultiplicityVector) -> list[MultiPoly]:
    """The factors z_k^{m_k} and (z_j - z_i)^{m_i} (j < i) forced out of d."""
    nvars = mult.n - 2
    factors = [
        MultiPoly.variable(nvars, i).power(mult[i + 2]) for i in range(nvars)
    ]
    for j in range(nvars):
        for i in range(j + 1, nvars):
            diff = MultiPoly.variable(nvars, j) - MultiPoly.variable(nvars, i)
            factors.append(diff.power(mult[i + 2]))
    return factors


def reduced_det(mult: MultiplicityVector) -> MultiPoly:
    """d with the forced factors divided out exactly.

    A failed division here contradicts the factorization the construction
    guarantees, so it aborts loudly instead of returning anything partial.
    """
    d = degeneracy_det(mult)
    if d.is_zero:
        raise InputError(f"the determinant vanishes identically for {mult}")
    for factor in forced_factors(mult):
        try:
            d = d.exact_divide(factor)
        except NotDivisibleError as exc:
            raise NotDivisibleError(
                f"forced factor {factor} does not divide the determinant for "
                f"{mult}; this is a bug or invalid input"
            ) from exc
    return d


def is_degenerate(divisor: PointDivisor) -> bool:
    """Does the smaller exponent drop below total/2 at this configuration?

    True exactly when the determinant vanishes at the divisor's coordinates,
    equivalently when a derivation of degree total/2 - 1 exists.
    """
    return det_rational(evaluated_condition_matrix(divisor)) == 0


def degenerate_witness(divisor: PointDivisor):
    """A degree-(total/2 - 1) member when the configuration is degenerate."""
    from .exponents import derivation_space_basis

    basis = derivation_space_basis(divisor, divisor.total // 2 - 1)
    return basis[0] if basis else None


@dataclass(frozen=True)
class ScanReport:
    """Grid evaluation of the reduced determinant.

    ``degenerate`` lists grid tuples that are valid configurations (nonzero,
    pairwise distinct coordinates) where d1 vanishes; ``non_arrangement_zeros``
    lists vanishing tuples that do not define an arrangement and are reported
    separately rather than interpreted.  ``divisibility`` records, for each
    forbidden factor, whether it exactly divides d1 (a counterexample
    detector for the expectation that it never does).
    """

    mult: MultiplicityVector
    d1: MultiPoly
    degenerate: tuple[tuple[Fraction, ...], ...]
    non_arrangement_zeros: tuple[tuple[Fraction, ...], ...]
    divisibility: dict[str, bool]
    points_scanned: int


def scan_degenerations(
    mult: MultiplicityVector, grid: Sequence[Fraction]
) -> ScanReport:
    nvars = mult.n - 2
    d1 = reduced_det(mult)
    degenerate = []
    invalid = []
    values = [Fraction(v) for v in grid]
    count = 0
    for tup in iter_product(values, repeat=nvars):
        count += 1
        if d1.evaluate(tup) != 0:
            continue
        valid = all(v != 0 for v in tup) and len(set(tup)) == nvars
        (degenerate if valid else invalid).append(tup)

    divisibility: dict[str, bool] = {}
    for i in range(nvars):
        factor = MultiPoly.variable(nvars, i)
        divisibility[f"z{i + 3}"] = factor.divides(d1)
    for j in range(nvars):
        for i in range(j + 1, nvars):
            factor = MultiPoly.variable(nvars, j) - MultiPoly.variable(nvars, i)
            divisibility[f"z{j + 3}-z{i + 3}"] = factor.divides(d1)

    return ScanReport(
        mult=mult,
        d1=d1,
        degenerate=tuple(degenerate),
        non_arrangement_zeros=tuple(invalid),
        divisibility=divisibility,
        points_scanned=count,
    )
