"""Request/response models for the service and the CLI.

Rationals travel as strings ("p/q" or "p"), projective points as such a
string or "inf", multivariate polynomials as term lists sorted in the
monomial order (z3 > z4 > ..., leading term first).
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from .algebra.multipoly import MultiPoly
from .algebra.rational import format_rational
from .divisor import Derivation, PointDivisor


class DivisorInput(BaseModel):
    """A multi-arrangement of points: {"points": ["0", "inf", "1", ...], "mult": [3, 3, 1]}."""

    points: list[str] = Field(min_length=2)
    mult: list[int] = Field(min_length=2)


class ArrangementInput(BaseModel):
    """A line arrangement: {"lines": [["a", "b", "c"], ...]} with rational strings."""

    lines: list[list[str]] = Field(min_length=1)


class PolyTerm(BaseModel):
    exponents: list[int]
    coeff: str


class PolynomialOut(BaseModel):
    variables: list[int]
    terms: list[PolyTerm]
    pretty: str


class DerivationOut(BaseModel):
    dx: list[str]
    dy: list[str]
    degree: int


class NormalizationOut(BaseModel):
    """How the input was brought to the 0/infinity frame."""

    order: list[int]
    mobius: list[list[str]]
    z: list[str]


class ExponentsRequest(BaseModel):
    divisor: DivisorInput


class ExponentsResponse(BaseModel):
    e1: int
    e2: int
    ntilde: int
    case_tag: str
    predicted: tuple[int, int] | None
    basis: list[DerivationOut]
    normalization: NormalizationOut


class ClassifyRequest(BaseModel):
    mult: list[int] = Field(min_length=2)


class ClassifyResponse(BaseModel):
    case_tag: str
    predicted: tuple[int, int] | None
    ntilde: int


class DetRequest(BaseModel):
    mult: list[int] = Field(min_length=2)


class DetResponse(BaseModel):
    size: int
    det: PolynomialOut


class ReducedDetResponse(BaseModel):
    d1: PolynomialOut


class DegenerateRequest(BaseModel):
    divisor: DivisorInput


class DegenerateResponse(BaseModel):
    degenerate: bool
    boundary_degree: int
    witness: DerivationOut | None


class ScanRequest(BaseModel):
    mult: list[int] = Field(min_length=2)
    grid: list[str] | None = None
    lo: int = -3
    hi: int = 3


class ScanResponse(BaseModel):
    d1: PolynomialOut
    degenerate: list[list[str]]
    non_arrangement_zeros: list[list[str]]
    divisibility: dict[str, bool]
    points_scanned: int


class SigmaRequest(BaseModel):
    mr: int = Field(ge=2)
    u: int = Field(ge=2)


class SigmaResponse(BaseModel):
    value: int
    closed_form: int
    two_block_form: int


class LeadingCheckRequest(BaseModel):
    mult: list[int] = Field(min_length=2)


class LeadingCheckResponse(BaseModel):
    match: bool
    monomial: list[int]
    determinant_coeff: str
    laplace_coeff: str
    attaining_partitions: int


class SchurCheckRequest(BaseModel):
    mult: list[int] = Field(min_length=2)


class SchurCheckResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    match: bool
    sign: int
    shape: tuple[int, int] = Field(serialization_alias="lambda", validation_alias="lambda")


class TeraoRequest(BaseModel):
    arrangement: ArrangementInput


class CertificateOut(BaseModel):
    kind: str
    line: int | None = None
    class_id: int | None = None
    point: list[str] | None = None
    branch: str | None = None


class LineReportOut(BaseModel):
    line: int
    restriction: list[int]
    classes: list[int]


class TeraoResponse(BaseModel):
    guaranteed: bool
    certificates: list[CertificateOut]
    lines: list[LineReportOut]


class ErrorResponse(BaseModel):
    error: str
    message: str


# -- converters from core objects -------------------------------------------


def polynomial_out(poly: MultiPoly) -> PolynomialOut:
    return PolynomialOut(
        variables=list(poly.variable_indices),
        terms=[PolyTerm(**t) for t in poly.serialize()],
        pretty=str(poly),
    )


def derivation_out(theta: Derivation) -> DerivationOut:
    return DerivationOut(**theta.serialize())


def normalization_out(divisor: PointDivisor) -> NormalizationOut:
    return NormalizationOut(
        order=list(divisor.order),
        mobius=[[format_rational(v) for v in row] for row in divisor.mobius],
        z=[format_rational(v) for v in divisor.z],
    )
