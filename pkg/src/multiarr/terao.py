"""Line arrangements in the projective plane and freeness certificates.

Restricting an arrangement to one of its lines yields a multi-arrangement
of points whose multiplicities are determined by the incidences alone.
Whenever those multiplicities force the exponents of the restriction, the
combinatorics of the arrangement decides its freeness, so the lattice-
determines-freeness conjecture holds for every arrangement with that
intersection lattice.  This module computes intersection lattices exactly
and checks the published sufficient conditions:

1. some line meets the others in at most 3 points;
2. some line carries only points of multiplicity at most 3;
3. some line's restriction has m1 >= m2 + ... + mn;
4. some line's restriction has average multiplicity below 2;
plus the high-multiplicity-point criterion: a point lying on more than
(|A| - 3)/2 of the lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterable, Sequence

from .algebra.rational import format_rational, parse_rational
from .divisor import MultiplicityVector
from .errors import InputError


def _canonical_triple(values: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    vals = tuple(Fraction(v) for v in values)
    if len(vals) != 3 or all(v == 0 for v in vals):
        raise InputError(f"not a projective triple: {values}")
    lead = next(v for v in vals if v != 0)
    return tuple(v / lead for v in vals)  # type: ignore[return-value]


@dataclass(frozen=True)
class ProjLine:
    """The line a*x + b*y + c*z = 0, scaled so its first nonzero entry is 1."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = _canonical_triple((self.a, self.b, self.c))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def from_strs(cls, triple: Sequence[str]) -> "ProjLine":
        if len(triple) != 3:
            raise InputError(f"a line needs 3 coefficients, got {triple}")
        return cls(*(parse_rational(t) for t in triple))

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def serialize(self) -> list[str]:
        return [format_rational(v) for v in self.coeffs]


@dataclass(frozen=True)
class PlanePoint:
    """A point of the projective plane, canonically scaled like ProjLine."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        x, y, z = _canonical_triple((self.x, self.y, self.z))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)

    def serialize(self) -> list[str]:
        return [format_rational(v) for v in self.coords]


def incident(line: ProjLine, point: PlanePoint) -> bool:
    a, b, c = line.coeffs
    x, y, z = point.coords
    return a * x + b * y + c * z == 0


def meet(l1: ProjLine, l2: ProjLine) -> PlanePoint:
    a1, b1, c1 = l1.coeffs
    a2, b2, c2 = l2.coeffs
    cross = (b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2)
    if all(v == 0 for v in cross):
        raise InputError("the lines coincide")
    return PlanePoint(*cross)


@dataclass(frozen=True)
class LineArrangement:
    lines: tuple[ProjLine, ...]

    def __post_init__(self):
        if len(set(self.lines)) != len(self.lines):
            raise InputError("lines must be pairwise distinct")

    @classmethod
    def from_strings(cls, triples: Iterable[Sequence[str]]) -> "LineArrangement":
        return cls(tuple(ProjLine.from_strs(t) for t in triples))

    @property
    def size(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class LatticePoint:
    """An intersection point with the set of lines through it."""

    point: PlanePoint
    incident_lines: frozenset[int]

    @property
    def barmult(self) -> int:
        """Number of arrangement lines through the point (at least 2)."""
        return len(self.incident_lines)


def intersection_lattice(arrangement: LineArrangement) -> list[LatticePoint]:
    """All pairwise intersection points with their full incidence sets.

    The output order is deterministic (sorted by coordinates).
    """
    lines = arrangement.lines
    seen: dict[PlanePoint, set[int]] = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = meet(lines[i], lines[j])
            if p not in seen:
                seen[p] = {
                    k for k, line in enumerate(lines) if incident(line, p)
                }
    points = sorted(seen, key=lambda p: p.coords)
    return [LatticePoint(point=p, incident_lines=frozenset(seen[p])) for p in points]


def restriction_profile(
    arrangement: LineArrangement, line_index: int
) -> tuple[int, ...]:
    """Sorted multiplicities of the point divisor cut on one line by the others.

    Each intersection point p on the line contributes barmult(p) - 1, and
    the total is |A| - 1 since every other line meets the chosen one exactly
    once.  Returned as a plain tuple because a pencil leaves a single point.
    """
    if not 0 <= line_index < arrangement.size:
        raise InputError(f"line index {line_index} out of range")
    mults = [
        lp.barmult - 1
        for lp in intersection_lattice(arrangement)
        if line_index in lp.incident_lines
    ]
    return tuple(sorted(mults, reverse=True))


def restriction_multiplicities(
    arrangement: LineArrangement, line_index: int
) -> MultiplicityVector:
    """The restriction as a multiplicity vector (needs at least 2 points)."""
    return MultiplicityVector(restriction_profile(arrangement, line_index))


@dataclass(frozen=True)
class LineClassReport:
    line_index: int
    restriction: tuple[int, ...]
    classes: tuple[int, ...]


def _classes_for_line(line_index: int, lattice: list[LatticePoint]) -> LineClassReport:
    on_line = [lp for lp in lattice if line_index in lp.incident_lines]
    restriction = tuple(sorted((lp.barmult - 1 for lp in on_line), reverse=True))
    classes = []
    if len(on_line) <= 3:
        classes.append(1)
    if all(lp.barmult <= 3 for lp in on_line):
        classes.append(2)
    if restriction[0] >= sum(restriction[1:]):
        classes.append(3)
    if sum(restriction) < 2 * len(restriction):
        classes.append(4)
    return LineClassReport(
        line_index=line_index, restriction=restriction, classes=tuple(classes)
    )


def check_classes(arrangement: LineArrangement) -> list[LineClassReport]:
    """Which of the four line conditions hold, per line."""
    if arrangement.size < 3:
        raise InputError("class checks need at least 3 lines")
    lattice = intersection_lattice(arrangement)
    return [_classes_for_line(i, lattice) for i in range(arrangement.size)]


@dataclass(frozen=True)
class HighPointResult:
    satisfied: bool
    point: PlanePoint | None
    barmult: int
    branch: str | None  # "covering" | "pencil-dominant"


def check_high_multiplicity_point(arrangement: LineArrangement) -> HighPointResult:
    """Look for a point on more than (|A| - 3)/2 of the lines.

    When found, the certificate branches: "covering" when every intersection
    point lies on a line through the witness (the supersolvable situation),
    otherwise "pencil-dominant" (some line then has average restricted
    multiplicity below 2).
    """
    if arrangement.size < 3:
        raise InputError("the point criterion needs at least 3 lines")
    lattice = intersection_lattice(arrangement)
    best = max(lattice, key=lambda lp: lp.barmult)
    if 2 * best.barmult <= arrangement.size - 3:
        return HighPointResult(satisfied=False, point=None, barmult=best.barmult, branch=None)
    pencil = best.incident_lines
    covering = all(
        lp.incident_lines & pencil for lp in lattice
    )
    return HighPointResult(
        satisfied=True,
        point=best.point,
        barmult=best.barmult,
        branch="covering" if covering else "pencil-dominant",
    )


@dataclass(frozen=True)
class Certificate:
    kind: str  # "line_class" | "high_multiplicity_point"
    line_index: int | None = None
    class_id: int | None = None
    point: PlanePoint | None = None
    branch: str | None = None


@dataclass(frozen=True)
class TeraoStatus:
    guaranteed: bool
    certificates: tuple[Certificate, ...]
    lines: tuple[LineClassReport, ...]
    high_point: HighPointResult


def terao_status(arrangement: LineArrangement) -> TeraoStatus:
    """Disjunction of the published sufficient conditions, with certificates.

    ``guaranteed`` is true when any line satisfies any of the four classes
    or the high-multiplicity-point criterion applies.  Nothing beyond those
    conditions is attempted.
    """
    reports = check_classes(arrangement)
    certificates: list[Certificate] = []
    for report in reports:
        for class_id in report.classes:
            certificates.append(
                Certificate(kind="line_class", line_index=report.line_index, class_id=class_id)
            )
    high = check_high_multiplicity_point(arrangement)
    if high.satisfied:
        certificates.append(
            Certificate(kind="high_multiplicity_point", point=high.point, branch=high.branch)
        )
    return TeraoStatus(
        guaranteed=bool(certificates),
        certificates=tuple(certificates),
        lines=tuple(reports),
        high_point=high,
    )


# -- deterministic generators (used by tests and handy for probing) ----------


def near_pencil(size: int) -> LineArrangement:
    """size - 1 concurrent lines plus one line avoiding their common point."""
    if size < 3:
        raise InputError("a near-pencil needs at least 3 lines")
    lines = [ProjLine(Fraction(1), Fraction(i), Fraction(0)) for i in range(size - 1)]
    lines.append(ProjLine(Fraction(0), Fraction(0), Fraction(1)))
    return LineArrangement(tuple(lines))


def random_arrangement(rng: Random, size: int, bound: int = 9) -> LineArrangement:
    """Distinct lines with integer coefficients drawn from [-bound, bound]."""
    lines: list[ProjLine] = []
    seen = set()
    while len(lines) < size:
        triple = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(3))
        if all(v == 0 for v in triple):
            continue
        line = ProjLine(*triple)
        if line in seen:
            continue
        seen.add(line)
        lines.append(line)
    return LineArrangement(tuple(lines))
