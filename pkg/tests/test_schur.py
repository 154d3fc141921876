from itertools import combinations

import pytest

from multiarr.algebra.multipoly import MultiPoly, variables
from multiarr.divisor import MultiplicityVector
from multiarr.errors import InputError
from multiarr.schur import RectPartition, schur_identity_check, schur_rectangular


def elementary(nvars: int, k: int) -> MultiPoly:
    total = MultiPoly.zero(nvars)
    for combo in combinations(range(nvars), k):
        term = MultiPoly.one(nvars)
        for i in combo:
            term = term * MultiPoly.variable(nvars, i)
        total = total + term
    return total


class TestSchurRectangular:
    def test_single_box_is_e1(self):
        assert schur_rectangular(RectPartition(1, 1, 2)) == elementary(2, 1)

    def test_column_is_e2(self):
        assert schur_rectangular(RectPartition(1, 2, 4)) == elementary(4, 2)

    def test_row_of_two_is_h2(self):
        z3, z4 = variables(2)
        expected = z3.power(2) + z3 * z4 + z4.power(2)
        assert schur_rectangular(RectPartition(2, 1, 2)) == expected

    def test_too_tall_rejected(self):
        with pytest.raises(InputError):
            RectPartition(1, 3, 2)

    def test_symmetry_under_transpositions(self):
        for base, height, nvars in [(2, 1, 3), (1, 2, 3), (2, 2, 3), (3, 2, 4)]:
            poly = schur_rectangular(RectPartition(base, height, nvars))
            for i in range(nvars):
                for j in range(i + 1, nvars):
                    swapped = {}
                    for exps, coeff in poly.terms.items():
                        e = list(exps)
                        e[i], e[j] = e[j], e[i]
                        swapped[tuple(e)] = coeff
                    assert MultiPoly(nvars, swapped) == poly


class TestIdentityCheck:
    def test_harmonic_family(self):
        result = schur_identity_check(MultiplicityVector((3, 3, 1, 1)))
        assert result.match and (result.base, result.height) == (1, 1)

    def test_taller_rectangle(self):
        result = schur_identity_check(MultiplicityVector((4, 4, 1, 1, 1, 1)))
        assert result.match and (result.base, result.height) == (1, 2)

    def test_empty_rectangle(self):
        result = schur_identity_check(MultiplicityVector((2, 2, 1, 1)))
        assert result.match and result.base == 0
        assert result.d1 in (MultiPoly.one(2), -MultiPoly.one(2))

    def test_strictness_violation(self):
        with pytest.raises(InputError):
            schur_identity_check(MultiplicityVector((4, 2, 1, 1)))

    def test_shape_violation(self):
        with pytest.raises(InputError):
            schur_identity_check(MultiplicityVector((3, 2, 2, 1)))

    def test_all_admissible_small_shapes(self):
        found = 0
        for ones in range(1, 7):
            n = ones + 2
            for m1 in range(1, 7):
                for m2 in range(1, m1 + 1):
                    mult = (m1, m2) + (1,) * ones
                    if (m1 + m2 + ones) % 2:
                        continue
                    if not (m1 - m2 < n - 2 < m1 + m2):
                        continue
                    if sum(mult) // 2 - 1 - m1 < 0:
                        continue
                    result = schur_identity_check(MultiplicityVector(mult))
                    assert result.match, mult
                    found += 1
        assert found >= 12
