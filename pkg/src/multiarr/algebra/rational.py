"""Exact rational scalars and their wire format.

All scalar arithmetic in this package happens over the rationals through
:class:`fractions.Fraction` (arbitrary precision, always in lowest terms,
positive denominator).  This module adds only the string codec used by the
JSON interfaces: ``"p/q"``, or plain ``"p"`` when the denominator is 1.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import InputError

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a :class:`Fraction`."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
