from fractions import Fraction

import pytest

from multiarr.algebra.rational import format_rational, parse_rational
from multiarr.errors import InputError


def test_parse():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational(" 2/6 ") == Fraction(1, 3)


def test_format():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(-8, 2)) == "-4"


def test_roundtrip():
    for text in ("0", "-1/3", "22/7"):
        assert format_rational(parse_rational(text)) == text


def test_rejects_junk():
    with pytest.raises(InputError):
        parse_rational("a/b")
    with pytest.raises(InputError):
        parse_rational("1/0")
