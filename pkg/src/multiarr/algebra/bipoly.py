"""Homogeneous polynomials in two variables over the rationals.

A nonzero polynomial of degree d is stored as the coefficient tuple
``(c0, ..., cd)`` of ``c0*x^d + c1*x^(d-1)*y + ... + cd*y^d``.  The zero
polynomial has its own representation (an empty tuple); asking for its
degree raises instead of returning a sentinel number.

Values are immutable after construction and every operation returns a new
instance, so they are safe to share between concurrent tasks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import InputError
from .rational import format_rational


class BiPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = tuple(Fraction(c) for c in coeffs)
        if all(c == 0 for c in cs):
            cs = ()
        self.coeffs = cs

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls(())

    @classmethod
    def monomial(cls, degree: int, ypow: int, coeff: Fraction | int = 1) -> "BiPoly":
        """coeff * x^(degree-ypow) * y^ypow."""
        if degree < 0 or not 0 <= ypow <= degree:
            raise InputError(f"bad monomial (degree={degree}, ypow={ypow})")
        cs = [Fraction(0)] * (degree + 1)
        cs[ypow] = Fraction(coeff)
        return cls(cs)

    @classmethod
    def x_power(cls, k: int) -> "BiPoly":
        return cls.monomial(k, 0)

    @classmethod
    def y_power(cls, k: int) -> "BiPoly":
        return cls.monomial(k, k)

    @classmethod
    def linear_form(cls, z: Fraction | int) -> "BiPoly":
        """x - z*y, the degree-1 form vanishing at the point [z : 1]."""
        return cls((Fraction(1), -Fraction(z)))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise InputError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        d = self.degree
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            factors = []
            if d - j > 0:
                factors.append("x" if d - j == 1 else f"x^{d - j}")
            if j > 0:
                factors.append("y" if j == 1 else f"y^{j}")
            mono = "*".join(factors) or "1"
            if c == 1 and factors:
                parts.append(mono)
            elif c == -1 and factors:
                parts.append(f"-{mono}")
            elif factors:
                parts.append(f"{format_rational(c)}*{mono}")
            else:
                parts.append(format_rational(c))
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise InputError(
                f"cannot add homogeneous polynomials of degrees "
                f"{self.degree} and {other.degree}"
            )
        return BiPoly(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "BiPoly":
        return BiPoly(-c for c in self.coeffs)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if self.is_zero or other.is_zero:
            return BiPoly.zero()
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return BiPoly(out)

    def scale(self, c: Fraction | int) -> "BiPoly":
        c = Fraction(c)
        if c == 0:
            return BiPoly.zero()
        return BiPoly(c * a for a in self.coeffs)

    def power(self, k: int) -> "BiPoly":
        if k < 0:
            raise InputError("negative power")
        result = BiPoly((Fraction(1),))
        for _ in range(k):
            result = result * self
        return result

    # -- division by the basic linear forms --------------------------------

    def divide_linear(self, z: Fraction) -> tuple["BiPoly", Fraction]:
        """Divide by (x - z*y): returns (q, r) with self = (x - z*y)*q + r*y^d."""
        if self.is_zero:
            return BiPoly.zero(), Fraction(0)
        q: list[Fraction] = []
        acc = Fraction(0)
        for c in self.coeffs[:-1]:
            acc = c + z * acc
            q.append(acc)
        rem = self.coeffs[-1] + z * acc
        return BiPoly(q), rem

    def divide_y(self) -> tuple["BiPoly", Fraction]:
        """Divide by y: returns (q, r) with self = y*q + r*x^d."""
        if self.is_zero:
            return BiPoly.zero(), Fraction(0)
        return BiPoly(self.coeffs[1:]), self.coeffs[0]

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, xv: Fraction, yv: Fraction) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        d = self.degree
        return sum(
            (c * xv ** (d - j) * yv**j for j, c in enumerate(self.coeffs)),
            Fraction(0),
        )

    def compose_linear(
        self, a: Fraction, b: Fraction, c: Fraction, d: Fraction
    ) -> "BiPoly":
        """Substitute x -> a*x + b*y, y -> c*x + d*y (stays homogeneous)."""
        if self.is_zero:
            return BiPoly.zero()
        xs = BiPoly((Fraction(a), Fraction(b)))
        ys = BiPoly((Fraction(c), Fraction(d)))
        deg = self.degree
        out = BiPoly.zero()
        for j, coeff in enumerate(self.coeffs):
            if coeff == 0:
                continue
            term = xs.power(deg - j) * ys.power(j)
            out = out + term.scale(coeff)
        return out

    # -- serialization -------------------------------------------------------

    def serialize(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]


def product(polys: Sequence[BiPoly]) -> BiPoly:
    out = BiPoly((Fraction(1),))
    for p in polys:
        out = out * p
    return out
