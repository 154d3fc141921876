"""Exception types shared across the package.

Every error that can reach the service or the CLI carries a stable ``code``
so responses can be matched programmatically; the message is for humans.
"""

from __future__ import annotations


class MultiarrError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "computation_error"


class InputError(MultiarrError):
    """A value violates a documented precondition (bad multiplicities,
    duplicate points, parity violations, out-of-range parameters...)."""

    code = "invalid_input"


class NotDivisibleError(MultiarrError):
    """An exact polynomial division left a remainder.

    When raised from the determinant reduction this signals that the forced
    factorization failed, which means a bug or invalid input; it must never
    be swallowed.
    """

    code = "not_divisible"


class CertificationError(MultiarrError):
    """An internal consistency guarantee failed (e.g. no certifying basis
    could be built even though the module is free).  Always a bug."""

    code = "certification_failed"


def error_code(exc: BaseException) -> str:
    """Map an exception to the stable error code used on the wire."""
    if isinstance(exc, MultiarrError):
        return exc.code
    if isinstance(exc, ZeroDivisionError):
        return "division_by_zero"
    if isinstance(exc, ValueError):
        return "invalid_input"
    return "internal_error"
