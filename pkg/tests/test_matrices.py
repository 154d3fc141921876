from fractions import Fraction
from random import Random

import pytest

from multiarr.algebra.matrices import (
    RingMatrix,
    det_cofactor,
    det_fraction_free,
    det_rational,
    nullspace,
    rank,
)
from multiarr.algebra.multipoly import MultiPoly, variables
from multiarr.errors import InputError


def test_det_1x1():
    z3 = MultiPoly.variable(1, 0)
    assert det_fraction_free(RingMatrix.from_rows([[z3]])) == z3


def test_det_2x2_cross_check():
    z3, z4 = variables(2)
    m = RingMatrix.from_rows([[z3.power(3), z3], [z4.power(3), z4]])
    expected = z3 * z4 * (z3 - z4) * (z3 + z4)
    assert det_fraction_free(m) == expected


def test_det_equal_rows_is_zero():
    z3, z4 = variables(2)
    row = [z3 + z4, z3 * z4]
    assert det_fraction_free(RingMatrix.from_rows([row, row])).is_zero


def test_det_rejects_non_square():
    z3 = MultiPoly.variable(1, 0)
    with pytest.raises(InputError):
        det_fraction_free(RingMatrix.from_rows([[z3, z3]]))


def random_entry(rng: Random, nvars: int) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(1, 2)):
        exps = tuple(rng.randint(0, 2) for _ in range(nvars))
        terms[exps] = rng.randint(-4, 4)
    return MultiPoly(nvars, terms)


def test_fraction_free_agrees_with_cofactor():
    rng = Random(11)
    for n in (2, 3, 4, 5, 6):
        for _ in range(6 if n <= 4 else 2):
            nvars = rng.randint(1, 2)
            m = RingMatrix.from_rows(
                [[random_entry(rng, nvars) for _ in range(n)] for _ in range(n)]
            )
            assert det_fraction_free(m) == det_cofactor(m)


def test_det_rational():
    rows = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    assert det_rational(rows) == Fraction(-2)
    assert det_rational([[Fraction(0), Fraction(1)], [Fraction(0), Fraction(2)]]) == 0


def test_nullspace_examples():
    zero2 = [[Fraction(0)] * 2 for _ in range(2)]
    assert len(nullspace(zero2)) == 2
    identity3 = [
        [Fraction(int(i == j)) for j in range(3)] for i in range(3)
    ]
    assert nullspace(identity3) == []
    assert nullspace([[Fraction(1), Fraction(-1)]]) == [(Fraction(1), Fraction(1))]


def test_nullspace_unconstrained_needs_width():
    with pytest.raises(InputError):
        nullspace([])
    assert len(nullspace([], ncols=4)) == 4


def test_nullspace_vectors_annihilate_and_dimensions_add_up():
    rng = Random(23)
    for _ in range(40):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 6)
        rows = [
            [Fraction(rng.randint(-3, 3)) for _ in range(ncols)] for _ in range(nrows)
        ]
        basis = nullspace(rows)
        assert rank(rows) + len(basis) == ncols
        for v in basis:
            for row in rows:
                assert sum(a * b for a, b in zip(row, v)) == 0
