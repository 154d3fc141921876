"""Wronskians of power functions x^l1, ..., x^lk.

For a strictly decreasing tuple of nonnegative powers the Wronskian (rows =
derivative orders 0..k-1, columns = the powers) collapses to a single
monomial; both the closed form and a literal symbolic determinant are
provided so each can check the other.
"""

from __future__ import annotations

from ..errors import InputError

UniPoly = dict[int, int]  # exponent -> integer coefficient


def falling_factorial(p: int, k: int) -> int:
    """p * (p-1) * ... * (p-k+1); zero when k > p (k-th derivative of x^p)."""
    if k > p:
        return 0
    out = 1
    for t in range(k):
        out *= p - t
    return out


def _check_powers(powers) -> tuple[int, ...]:
    lam = tuple(int(p) for p in powers)
    if not lam:
        raise InputError("empty power tuple")
    if any(p < 0 for p in lam):
        raise InputError(f"negative power in {lam}")
    if any(a <= b for a, b in zip(lam, lam[1:])):
        raise InputError(f"powers must be strictly decreasing, got {lam}")
    return lam


def wronskian_closed_form(powers) -> tuple[int, int]:
    """(degree, coefficient) of the monomial Wronskian of x^powers.

    degree = sum(powers) - (0 + 1 + ... + k-1),
    coefficient = (-1)^floor(k/2) * prod_{i<j} (powers_i - powers_j).
    """
    lam = _check_powers(powers)
    k = len(lam)
    degree = sum(lam) - k * (k - 1) // 2
    coeff = (-1) ** (k // 2)
    for i in range(k):
        for j in range(i + 1, k):
            coeff *= lam[i] - lam[j]
    return degree, coeff


def wronskian_symbolic(powers) -> UniPoly:
    """Literal determinant of the derivative matrix, as a univariate polynomial."""
    lam = _check_powers(powers)
    k = len(lam)
    rows = [
        [_derivative_monomial(p, r) for p in lam]
        for r in range(k)
    ]
    return _det(rows)


def monomial_parts(poly: UniPoly) -> tuple[int, int]:
    """(degree, coefficient) of a monomial; rejects non-monomials."""
    terms = {e: c for e, c in poly.items() if c}
    if len(terms) != 1:
        raise InputError(f"not a monomial: {terms}")
    ((deg, coeff),) = terms.items()
    return deg, coeff


def _derivative_monomial(p: int, r: int) -> UniPoly:
    c = falling_factorial(p, r)
    return {p - r: c} if c else {}


def _mul(a: UniPoly, b: UniPoly) -> UniPoly:
    out: UniPoly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = e1 + e2
            new = out.get(key, 0) + c1 * c2
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def _add_scaled(a: UniPoly, b: UniPoly, sign: int) -> UniPoly:
    out = dict(a)
    for e, c in b.items():
        new = out.get(e, 0) + sign * c
        if new:
            out[e] = new
        else:
            out.pop(e, None)
    return out


def _det(rows: list[list[UniPoly]]) -> UniPoly:
    n = len(rows)
    if n == 1:
        return dict(rows[0][0])
    total: UniPoly = {}
    for j in range(n):
        entry = rows[0][j]
        if not entry:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = _mul(entry, _det(minor))
        total = _add_scaled(total, term, -1 if j % 2 else 1)
    return total
