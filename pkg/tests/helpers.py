"""Shared deterministic generators for the test suite."""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import Iterator

from multiarr.divisor import MultiplicityVector, PointDivisor


def draw_coordinates(rng: Random, count: int, span: int = 40, dens: int = 6) -> tuple[Fraction, ...]:
    """Distinct nonzero rationals with numerators in [-span, span]."""
    out: list[Fraction] = []
    seen = set()
    while len(out) < count:
        v = Fraction(rng.randint(-span, span), rng.randint(1, dens))
        if v == 0 or v in seen:
            continue
        seen.add(v)
        out.append(v)
    return tuple(out)


def random_divisor(rng: Random, mult: tuple[int, ...], span: int = 40) -> PointDivisor:
    mv = MultiplicityVector(mult)
    return PointDivisor.from_normalized(mv, draw_coordinates(rng, mv.n - 2, span=span))


def weakly_decreasing_vectors(max_total: int, min_parts: int = 2) -> Iterator[tuple[int, ...]]:
    """All weakly decreasing positive tuples with at least min_parts entries
    and total at most max_total."""

    def rec(prefix: tuple[int, ...], remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) >= min_parts:
            yield prefix
        for value in range(min(cap, remaining), 0, -1):
            yield from rec(prefix + (value,), remaining - value, value)

    for first in range(max_total, 0, -1):
        yield from rec((first,), max_total - first, first)


def matrix_buildable(mult: tuple[int, ...]) -> bool:
    """Preconditions of the degeneration matrix: even total, n >= 3, nonempty f-block."""
    total = sum(mult)
    return len(mult) >= 3 and total % 2 == 0 and total // 2 - 1 - mult[0] >= 0
