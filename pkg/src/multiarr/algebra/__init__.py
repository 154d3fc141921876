"""Exact arithmetic kernels: rationals, homogeneous bivariate polynomials,
sparse multivariate integer polynomials, determinants and kernels."""

from .bipoly import BiPoly
from .matrices import (
    RingMatrix,
    det_cofactor,
    det_fraction_free,
    det_rational,
    nullspace,
    rank,
    rref,
)
from .multipoly import MultiPoly, variables
from .rational import Rational, format_rational, parse_rational
from .wronskian import (
    falling_factorial,
    monomial_parts,
    wronskian_closed_form,
    wronskian_symbolic,
)

__all__ = [
    "BiPoly",
    "MultiPoly",
    "Rational",
    "RingMatrix",
    "det_cofactor",
    "det_fraction_free",
    "det_rational",
    "falling_factorial",
    "format_rational",
    "monomial_parts",
    "nullspace",
    "parse_rational",
    "rank",
    "rref",
    "variables",
    "wronskian_closed_form",
    "wronskian_symbolic",
]
