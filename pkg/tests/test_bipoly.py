from fractions import Fraction
from random import Random

import pytest

from multiarr.algebra.bipoly import BiPoly, product
from multiarr.errors import InputError


def test_zero_has_no_degree():
    assert BiPoly.zero().is_zero
    with pytest.raises(InputError):
        BiPoly.zero().degree
    assert BiPoly((0, 0)).is_zero  # collapses to the zero representation


def test_monomials_and_products():
    x, y = BiPoly.x_power(1), BiPoly.y_power(1)
    assert (x * y).coeffs == (0, 1, 0)
    q = BiPoly.linear_form(Fraction(2))
    assert q.coeffs == (1, -2)
    assert product([x, y, q]).degree == 3


def test_add_requires_matching_degrees():
    with pytest.raises(InputError):
        BiPoly.x_power(2) + BiPoly.x_power(1)
    assert (BiPoly.x_power(2) + BiPoly.zero()) == BiPoly.x_power(2)


def test_divide_linear_roundtrip():
    rng = Random(5)
    for _ in range(50):
        d = rng.randint(0, 6)
        p = BiPoly([Fraction(rng.randint(-4, 4)) for _ in range(d + 1)])
        z = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        q, r = p.divide_linear(z)
        rebuilt = BiPoly.linear_form(z) * q if not q.is_zero else BiPoly.zero()
        if r != 0:
            rem = BiPoly.monomial(d, d, r) if not p.is_zero else BiPoly.zero()
            rebuilt = rebuilt + rem if not rebuilt.is_zero else rem
        assert rebuilt == p


def test_divide_y():
    p = BiPoly.y_power(1) * BiPoly.linear_form(Fraction(3))
    q, r = p.divide_y()
    assert r == 0 and q == BiPoly.linear_form(Fraction(3))
    q2, r2 = BiPoly.x_power(2).divide_y()
    assert r2 == 1 and q2.is_zero


def test_evaluate():
    p = BiPoly.linear_form(Fraction(2)).power(2)  # (x - 2y)^2
    assert p.evaluate(Fraction(2), Fraction(1)) == 0
    assert p.evaluate(Fraction(3), Fraction(1)) == 1


def test_compose_linear_is_multiplicative():
    rng = Random(9)
    for _ in range(20):
        a, b, c, d = (Fraction(rng.randint(-3, 3)) for _ in range(4))
        if a * d - b * c == 0:
            continue
        p = BiPoly([Fraction(rng.randint(-3, 3)) for _ in range(4)])
        q = BiPoly([Fraction(rng.randint(-3, 3)) for _ in range(3)])
        if p.is_zero or q.is_zero:
            continue
        lhs = (p * q).compose_linear(a, b, c, d)
        rhs = p.compose_linear(a, b, c, d) * q.compose_linear(a, b, c, d)
        assert lhs == rhs


def test_serialize():
    p = BiPoly((Fraction(1), Fraction(-1, 2)))
    assert p.serialize() == ["1", "-1/2"]
