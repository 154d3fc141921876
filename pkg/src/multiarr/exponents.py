"""Exponents of a divisor: degreewise kernel sweep and closed-form cases.

The derivation module of a divisor is free of rank 2; the degrees (e1, e2)
of a homogeneous basis are its exponents, with e1 + e2 = total.  For a
concrete divisor the smaller exponent is found by sweeping degrees and
solving the membership conditions as an exact linear system; a certifying
basis is built on the way out.  For several families of multiplicity
vectors the exponents are position-independent and predicted in closed
form; ``classify`` names the applicable case.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .algebra.bipoly import BiPoly
from .algebra.matrices import nullspace
from .algebra.wronskian import falling_factorial
from .divisor import (
    Derivation,
    MultiplicityVector,
    PointDivisor,
    coefficient_determinant,
    saito_check,
)
from .errors import CertificationError, InputError


class CaseTag(Enum):
    DOMINANT = "dominant"          # m1 at least the sum of the others
    LOW_TOTAL = "low_total"        # total <= 2n - 2
    ODD_REDUCTION = "odd_reduction"  # total = 2n - 1
    ALL_TWOS = "all_twos"          # every multiplicity equals 2
    SMALL_N = "small_n"            # n <= 3: only one point configuration
    MAIN_REGIME = "main_regime"    # position-dependent in general


@dataclass(frozen=True)
class Classification:
    tag: CaseTag
    predicted: tuple[int, int] | None


@dataclass(frozen=True)
class ExponentPair:
    e1: int
    e2: int
    basis: tuple[Derivation, Derivation]

    def __post_init__(self):
        if self.e1 > self.e2:
            raise InputError("exponents must satisfy e1 <= e2")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.e1, self.e2)


def membership_matrix(divisor: PointDivisor, degree: int) -> list[list[Fraction]]:
    """Linear conditions on the 2*(degree+1) coefficients of a degree-``degree`` member.

    Unknowns are the coefficients (a_0..a_d) of the dx component and
    (b_0..b_d) of the dy component, a_j multiplying x^(d-j)*y^j.  Rows:

    * a_j = 0 whenever d - j < m1  (x^m1 must divide the dx component),
    * b_j = 0 whenever j < m2      (y^m2 must divide the dy component),
    * for each further point z with multiplicity m and each k < m, the k-th
      derivative of (dx - z*dy components at y=1) vanishes at x=z.
    """
    m = divisor.mult.entries
    d = degree
    width = 2 * (d + 1)
    rows: list[list[Fraction]] = []

    for j in range(d + 1):
        if d - j < m[0]:
            row = [Fraction(0)] * width
            row[j] = Fraction(1)
            rows.append(row)
    for j in range(d + 1):
        if j < m[1]:
            row = [Fraction(0)] * width
            row[d + 1 + j] = Fraction(1)
            rows.append(row)
    for i, z in enumerate(divisor.z):
        for k in range(m[i + 2]):
            row = [Fraction(0)] * width
            for j in range(d + 1):
                fall = falling_factorial(d - j, k)
                if fall == 0:
                    continue
                power = z ** (d - j - k)
                row[j] = fall * power
                row[d + 1 + j] = -fall * power * z
            rows.append(row)
    return rows


def derivation_space_basis(divisor: PointDivisor, degree: int) -> list[Derivation]:
    """Kernel basis of the degree-``degree`` membership system, as derivations."""
    if degree < 0:
        return []
    rows = membership_matrix(divisor, degree)
    vectors = nullspace(rows, ncols=2 * (degree + 1))
    basis = []
    for v in vectors:
        px = BiPoly(v[: degree + 1])
        py = BiPoly(v[degree + 1 :])
        basis.append(Derivation(px, py))
    return basis


def dimension_at_degree(divisor: PointDivisor, degree: int) -> int:
    """Dimension of the space of degree-``degree`` members of the module."""
    return len(derivation_space_basis(divisor, degree))


def compute_exponents(divisor: PointDivisor) -> ExponentPair:
    """Exponents with a certifying basis.

    e1 is the least degree at which a member exists; the sweep never needs
    to pass total/2 because e1 <= e2 and e1 + e2 = total.  The second basis
    element is the first degree-e2 kernel vector whose coefficient
    determinant with the first does not vanish; the determinant is then
    automatically a nonzero multiple of the defining polynomial, which the
    final check asserts.
    """
    total = divisor.total
    first: Derivation | None = None
    e1 = -1
    for degree in range(total // 2 + 1):
        basis = derivation_space_basis(divisor, degree)
        if basis:
            first = basis[0]
            e1 = degree
            break
    if first is None:
        raise CertificationError(
            f"no member found up to degree {total // 2} for {divisor.mult}"
        )
    e2 = total - e1
    for candidate in derivation_space_basis(divisor, e2):
        if not coefficient_determinant(first, candidate).is_zero:
            pair = ExponentPair(e1, e2, (first, candidate))
            if not saito_check(first, candidate, divisor):
                raise CertificationError(
                    f"basis candidate failed the determinant criterion for {divisor.mult}"
                )
            return pair
    raise CertificationError(f"no certifying partner at degree {e2} for {divisor.mult}")


def classify(mult: MultiplicityVector) -> Classification:
    """First applicable closed-form case, with its predicted exponents.

    Priority: DOMINANT, LOW_TOTAL, ODD_REDUCTION, ALL_TWOS, SMALL_N,
    MAIN_REGIME.  Every tag except MAIN_REGIME determines the exponents from
    the multiplicities alone; for SMALL_N they are computed once on the
    canonical configuration z3 = 1 (any 3 points are projectively
    equivalent).
    """
    m = mult.entries
    n = mult.n
    total = mult.total
    rest = total - m[0]
    if m[0] >= rest:
        return Classification(CaseTag.DOMINANT, (rest, m[0]))
    if total <= 2 * n - 2:
        return Classification(CaseTag.LOW_TOTAL, (total - n + 1, n - 1))
    if total == 2 * n - 1:
        return Classification(CaseTag.ODD_REDUCTION, (n - 1, n))
    if all(v == 2 for v in m):
        return Classification(CaseTag.ALL_TWOS, (n, n))
    if n <= 3:
        canonical = PointDivisor.from_normalized(mult, [Fraction(1)] * (n - 2))
        pair = compute_exponents(canonical)
        return Classification(CaseTag.SMALL_N, pair.pair)
    return Classification(CaseTag.MAIN_REGIME, None)


def generic_exponents(mult: MultiplicityVector) -> tuple[int, int]:
    """The balanced pair (floor(total/2), ceil(total/2)).

    Valid under the general-position hypotheses: the top multiplicity does
    not exceed the sum of the others, and total >= 2n - 2.  This is a
    prediction about configurations off a proper closed locus; no
    certificate is attached.
    """
    m = mult.entries
    total = mult.total
    if m[0] > total - m[0]:
        raise InputError(
            f"m1 exceeds the sum of the other multiplicities for {mult}"
        )
    if total < 2 * mult.n - 2:
        raise InputError(f"total {total} below 2n-2 = {2 * mult.n - 2} for {mult}")
    return (total // 2, (total + 1) // 2)
