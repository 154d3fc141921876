"""Multi-arrangements of points on the projective line.

A divisor is a finite set of distinct points with positive integer
multiplicities.  After normalization the point with the largest multiplicity
sits at 0 = [0:1] (linear form x), the runner-up at infinity = [1:0] (form
y), and the rest at [z_i : 1] with the z_i nonzero and pairwise distinct, so
the defining polynomial takes the shape

    x^m1 * y^m2 * prod_i (x - z_i*y)^m_i.

A derivation is a pair (p, q) of homogeneous polynomials of equal degree,
read as p*dx + q*dy; it belongs to the divisor's module when every point's
form alpha, raised to that point's multiplicity, divides p*dalpha/dx +
q*dalpha/dy.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra.bipoly import BiPoly, product
from .algebra.rational import format_rational, parse_rational
from .errors import InputError

MobiusMatrix = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]

IDENTITY: MobiusMatrix = (
    (Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(1)),
)


@dataclass(frozen=True)
class MultiplicityVector:
    """Weakly decreasing positive multiplicities m1 >= m2 >= ... >= mn, n >= 2."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(m) for m in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 2:
            raise InputError("a multiplicity vector needs at least 2 entries")
        if any(m < 1 for m in entries):
            raise InputError(f"multiplicities must be positive: {entries}")
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise InputError(f"multiplicities must be weakly decreasing: {entries}")

    @classmethod
    def sorted_from(cls, values: Iterable[int]) -> "MultiplicityVector":
        return cls(tuple(sorted((int(v) for v in values), reverse=True)))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        """The weighted point count, i.e. the degree of the defining polynomial."""
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(m) for m in self.entries) + ")"


@dataclass(frozen=True)
class ProjPoint:
    """Point of the projective line, stored as [a : b] with b = 1 or as [1 : 0]."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        if a == 0 and b == 0:
            raise InputError("[0 : 0] is not a projective point")
        if b != 0:
            a, b = a / b, Fraction(1)
        else:
            a, b = Fraction(1), Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def affine(cls, value: Fraction | int) -> "ProjPoint":
        return cls(Fraction(value), Fraction(1))

    @classmethod
    def infinity(cls) -> "ProjPoint":
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def from_str(cls, text: str) -> "ProjPoint":
        t = str(text).strip().lower()
        if t in ("inf", "infinity", "oo"):
            return cls.infinity()
        return cls.affine(parse_rational(text))

    @property
    def is_infinity(self) -> bool:
        return self.b == 0

    def to_str(self) -> str:
        return "inf" if self.is_infinity else format_rational(self.a)

    def apply(self, m: MobiusMatrix) -> "ProjPoint":
        (p, q), (r, s) = m
        return ProjPoint(p * self.a + q * self.b, r * self.a + s * self.b)

    def __str__(self) -> str:
        return self.to_str()


def mobius_to_zero_infinity(p1: ProjPoint, p2: ProjPoint) -> MobiusMatrix:
    """The projective map sending p1 to 0 and p2 to infinity.

    Normalized so that the pair (0, infinity) maps by the identity; for other
    pairs the map is determined only up to rescaling z -> c*z, which leaves
    every projective invariant (and the exponents) unchanged.
    """
    if p1 == p2:
        raise InputError("cannot normalize a repeated point")
    return ((p1.b, -p1.a), (-p2.b, p2.a))


def mobius_compose(m2: MobiusMatrix, m1: MobiusMatrix) -> MobiusMatrix:
    (a, b), (c, d) = m2
    (e, f), (g, h) = m1
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


@dataclass(frozen=True)
class PointDivisor:
    """A normalized multi-arrangement of points on the projective line.

    ``points`` holds the input points in multiplicity order (stable sort, so
    ties keep their input order); ``z`` holds the coordinates of points 3..n
    after the normalizing projective map ``mobius`` has sent the top two
    points to 0 and infinity.
    """

    points: tuple[ProjPoint, ...]
    mult: MultiplicityVector
    z: tuple[Fraction, ...]
    mobius: MobiusMatrix = field(default=IDENTITY)
    order: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.order:
            object.__setattr__(self, "order", tuple(range(len(self.points))))
        if len(self.points) != self.mult.n:
            raise InputError("points and multiplicities must have equal length")
        if len(self.z) != self.mult.n - 2:
            raise InputError("need one z coordinate per point beyond the first two")
        if any(v == 0 for v in self.z):
            raise InputError("normalized coordinates must be nonzero")
        if len(set(self.z)) != len(self.z):
            raise InputError("normalized coordinates must be pairwise distinct")

    # -- construction --------------------------------------------------------

    @classmethod
    def from_normalized(
        cls, mult: MultiplicityVector, z: Sequence[Fraction | int]
    ) -> "PointDivisor":
        zs = tuple(Fraction(v) for v in z)
        points = (ProjPoint.affine(0), ProjPoint.infinity()) + tuple(
            ProjPoint.affine(v) for v in zs
        )
        return cls(points=points, mult=mult, z=zs)

    @property
    def n(self) -> int:
        return self.mult.n

    @property
    def total(self) -> int:
        return self.mult.total

    @property
    def normalized_points(self) -> tuple[ProjPoint, ...]:
        """The points in their normalized coordinates: 0, infinity, z3, ..."""
        return (ProjPoint.affine(0), ProjPoint.infinity()) + tuple(
            ProjPoint.affine(v) for v in self.z
        )

    # -- polynomials ---------------------------------------------------------

    def defining_polynomial(self) -> BiPoly:
        """x^m1 * y^m2 * prod (x - z_i*y)^m_i, of degree ``total``."""
        m = self.mult.entries
        factors = [BiPoly.x_power(m[0]), BiPoly.y_power(m[1])]
        factors += [BiPoly.linear_form(v).power(m[i + 2]) for i, v in enumerate(self.z)]
        return product(factors)

    def reduced_polynomial(self) -> BiPoly:
        """Same point set with all multiplicities 1 (degree n)."""
        factors = [BiPoly.x_power(1), BiPoly.y_power(1)]
        factors += [BiPoly.linear_form(v) for v in self.z]
        return product(factors)


def normalize(
    points: Sequence[ProjPoint], mult: Sequence[int]
) -> PointDivisor:
    """Sort by multiplicity and move the top two points to 0 and infinity.

    Ties in the multiplicities are broken by input order, so the result is
    deterministic; the exponents do not depend on which of the tied points
    is sent where.
    """
    if len(points) != len(mult):
        raise InputError("points and multiplicities must have equal length")
    if len(points) < 2:
        raise InputError("need at least 2 points")
    if any(m < 1 for m in mult):
        raise InputError(f"multiplicities must be positive: {tuple(mult)}")
    if len(set(points)) != len(points):
        raise InputError("points must be pairwise distinct")

    order = sorted(range(len(points)), key=lambda i: (-mult[i], i))
    sorted_points = tuple(points[i] for i in order)
    sorted_mult = MultiplicityVector(tuple(mult[i] for i in order))
    matrix = mobius_to_zero_infinity(sorted_points[0], sorted_points[1])
    z = tuple(_affine_value(p.apply(matrix)) for p in sorted_points[2:])
    return PointDivisor(
        points=sorted_points,
        mult=sorted_mult,
        z=z,
        mobius=matrix,
        order=tuple(order),
    )


def _affine_value(p: ProjPoint) -> Fraction:
    if p.is_infinity:
        raise InputError("normalization sent a third point to infinity")
    return p.a


@dataclass(frozen=True)
class Derivation:
    """p*dx + q*dy with homogeneous components of a common degree."""

    px: BiPoly
    py: BiPoly

    def __post_init__(self):
        if self.px.is_zero and self.py.is_zero:
            raise InputError("the zero derivation is not allowed")
        if (
            not self.px.is_zero
            and not self.py.is_zero
            and self.px.degree != self.py.degree
        ):
            raise InputError(
                f"component degrees differ: {self.px.degree} vs {self.py.degree}"
            )

    @classmethod
    def euler(cls) -> "Derivation":
        return cls(BiPoly.x_power(1), BiPoly.y_power(1))

    @property
    def degree(self) -> int:
        return self.py.degree if self.px.is_zero else self.px.degree

    def applied_to_form(self, point: ProjPoint) -> BiPoly:
        """The image of the linear form vanishing at ``point``.

        The form is y for the infinite point and x - z*y otherwise, so the
        image is py, respectively px - z*py.
        """
        if point.is_infinity:
            return self.py
        if point.a == 0:
            return self.px
        return self.px - self.py.scale(point.a)

    def transform(self, m: MobiusMatrix) -> "Derivation":
        """Push forward along the projective map ``m`` (up to a scalar).

        Components become (a*px + b*py) and (c*px + d*py) composed with the
        adjugate of m; using the adjugate instead of the inverse rescales by
        det(m)^degree, which is harmless for membership questions.
        """
        (a, b), (c, d) = m
        adj = (d, -b, -c, a)
        new_px = (self.px.scale(a) + self.py.scale(b)).compose_linear(*adj)
        new_py = (self.px.scale(c) + self.py.scale(d)).compose_linear(*adj)
        return Derivation(new_px, new_py)

    def serialize(self) -> dict:
        return {
            "dx": self.px.serialize(),
            "dy": self.py.serialize(),
            "degree": self.degree,
        }


def _divisible_by_point_power(poly: BiPoly, point: ProjPoint, m: int) -> bool:
    """Does the m-th power of the form vanishing at ``point`` divide ``poly``?"""
    current = poly
    for _ in range(m):
        if current.is_zero:
            return True
        if point.is_infinity:
            current, rem = current.divide_y()
        else:
            current, rem = current.divide_linear(point.a)
        if rem != 0:
            return False
    return True


def is_member(theta: Derivation, divisor: PointDivisor) -> bool:
    """Membership in the divisor's derivation module.

    For every point: the point's multiplicity-th power of its linear form
    must divide the image of that form under theta, checked by repeated
    exact division.
    """
    for point, m in zip(divisor.normalized_points, divisor.mult):
        if not _divisible_by_point_power(theta.applied_to_form(point), point, m):
            return False
    return True


def theta1(divisor: PointDivisor) -> Derivation:
    """The minimal-degree member with no dx component.

    Its dy component is the defining polynomial divided by x^m1, so the
    degree is total - m1.
    """
    m = divisor.mult.entries
    factors = [BiPoly.y_power(m[1])]
    factors += [
        BiPoly.linear_form(v).power(m[i + 2]) for i, v in enumerate(divisor.z)
    ]
    return Derivation(BiPoly.zero(), product(factors))


def theta2(divisor: PointDivisor) -> Derivation:
    """The minimal-degree member proportional to the Euler derivation.

    The proportionality factor is defining/reduced, so the degree is
    total - n + 1.
    """
    m = divisor.mult.entries
    factors = [BiPoly.x_power(m[0] - 1), BiPoly.y_power(m[1] - 1)]
    factors += [
        BiPoly.linear_form(v).power(m[i + 2] - 1) for i, v in enumerate(divisor.z)
    ]
    h = product(factors)
    return Derivation(h * BiPoly.x_power(1), h * BiPoly.y_power(1))


def xi_basis(divisor: PointDivisor) -> tuple[Derivation, Derivation]:
    """Explicit degree-n basis for divisors with every multiplicity equal 2.

    For n = 2 the pair is (x^2 dx, y^2 dy).  For n >= 3 the components are
    built from the partial products Q_i = Q / (x - z_i*y) of the reduced
    polynomial Q:

        xi1 = (sum Q_i) * euler + y*(Q/x) dy
        xi2 = (sum z_i*Q_i) * euler - x*(Q/y) dx

    Both y*(Q/x) and x*(Q/y) are polynomials because x and y divide Q.
    """
    if any(m != 2 for m in divisor.mult):
        raise InputError(f"xi basis needs all multiplicities equal 2, got {divisor.mult}")
    if divisor.n == 2:
        return (
            Derivation(BiPoly.x_power(2), BiPoly.zero()),
            Derivation(BiPoly.zero(), BiPoly.y_power(2)),
        )
    forms = [BiPoly.linear_form(v) for v in divisor.z]
    xy = BiPoly.x_power(1) * BiPoly.y_power(1)
    q_over_x = BiPoly.y_power(1) * product(forms)
    q_over_y = BiPoly.x_power(1) * product(forms)
    h1 = BiPoly.zero()
    h2 = BiPoly.zero()
    for i, v in enumerate(divisor.z):
        partial = xy * product(forms[:i] + forms[i + 1 :])
        h1 = h1 + partial
        h2 = h2 + partial.scale(v)
    xi1 = Derivation(
        h1 * BiPoly.x_power(1),
        h1 * BiPoly.y_power(1) + BiPoly.y_power(1) * q_over_x,
    )
    xi2 = Derivation(
        h2 * BiPoly.x_power(1) - BiPoly.x_power(1) * q_over_y,
        h2 * BiPoly.y_power(1),
    )
    return xi1, xi2


def coefficient_determinant(a: Derivation, b: Derivation) -> BiPoly:
    return a.px * b.py - a.py * b.px


def proportionality_constant(poly: BiPoly, target: BiPoly) -> Fraction | None:
    """c with poly = c*target (c may be 0 when poly is zero), else None."""
    if poly.is_zero:
        return Fraction(0)
    if target.is_zero or poly.degree != target.degree:
        return None
    ratio = None
    for p, t in zip(poly.coeffs, target.coeffs):
        if t == 0:
            if p != 0:
                return None
            continue
        r = p / t
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    return ratio


def saito_check(a: Derivation, b: Derivation, divisor: PointDivisor) -> bool:
    """Do the two members form a basis of the derivation module?

    True exactly when the coefficient determinant is a nonzero constant
    multiple of the defining polynomial.  Raises on non-members.
    """
    if not is_member(a, divisor) or not is_member(b, divisor):
        raise InputError("saito_check requires members of the derivation module")
    det = coefficient_determinant(a, b)
    c = proportionality_constant(det, divisor.defining_polynomial())
    return c is not None and c != 0
