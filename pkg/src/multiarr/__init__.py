"""Exact computations for multi-point divisors on the projective line.

Core objects: multiplicity vectors, normalized point divisors, derivations
and their module, the exponents (degrees of a free basis), the symbolic
degeneration determinant with its reduced form, rectangular Schur
polynomials, and combinatorial freeness certificates for plane line
arrangements.  Everything runs in exact rational/integer arithmetic.
"""

from .degeneracy import (
    build_condition_matrix,
    degeneracy_det,
    is_degenerate,
    reduced_det,
    scan_degenerations,
)
from .divisor import (
    Derivation,
    MultiplicityVector,
    PointDivisor,
    ProjPoint,
    is_member,
    normalize,
    saito_check,
    theta1,
    theta2,
    xi_basis,
)
from .exponents import (
    CaseTag,
    Classification,
    ExponentPair,
    classify,
    compute_exponents,
    dimension_at_degree,
    generic_exponents,
)
from .leading import (
    enumerate_admissible,
    laplace_expansion,
    leading_coefficient_check,
    overlap,
    sigma,
    sigma_closed_form,
)
from .schur import RectPartition, schur_identity_check, schur_rectangular
from .terao import (
    LineArrangement,
    ProjLine,
    check_classes,
    check_high_multiplicity_point,
    intersection_lattice,
    restriction_multiplicities,
    terao_status,
)

__version__ = "0.1.0"

__all__ = [
    "CaseTag",
    "Classification",
    "Derivation",
    "ExponentPair",
    "LineArrangement",
    "MultiplicityVector",
    "PointDivisor",
    "ProjLine",
    "ProjPoint",
    "RectPartition",
    "build_condition_matrix",
    "check_classes",
    "check_high_multiplicity_point",
    "classify",
    "compute_exponents",
    "degeneracy_det",
    "dimension_at_degree",
    "enumerate_admissible",
    "generic_exponents",
    "intersection_lattice",
    "is_degenerate",
    "is_member",
    "laplace_expansion",
    "leading_coefficient_check",
    "normalize",
    "overlap",
    "reduced_det",
    "restriction_multiplicities",
    "saito_check",
    "scan_degenerations",
    "schur_identity_check",
    "schur_rectangular",
    "sigma",
    "sigma_closed_form",
    "terao_status",
    "theta1",
    "theta2",
    "xi_basis",
]
