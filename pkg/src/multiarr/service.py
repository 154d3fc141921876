"""FastAPI service exposing every computation as a stateless endpoint.

The handler functions are plain request-model -> response-model functions;
the CLI calls them in-process and the HTTP layer is a thin wrapper.  Domain
errors map to HTTP 400 with a stable error code, schema violations to the
usual 422.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .algebra.rational import format_rational, parse_rational
from .degeneracy import (
    degenerate_witness,
    is_degenerate,
    layout,
    reduced_det,
    scan_degenerations,
)
from .degeneracy import degeneracy_det as _degeneracy_det
from .divisor import MultiplicityVector, PointDivisor, ProjPoint, normalize
from .errors import MultiarrError, error_code
from .exponents import classify, compute_exponents
from .leading import leading_coefficient_check, sigma, sigma_closed_form, two_block_closed_form
from .schemas import (
    ClassifyRequest,
    ClassifyResponse,
    DegenerateRequest,
    DegenerateResponse,
    DetRequest,
    DetResponse,
    DivisorInput,
    ErrorResponse,
    ExponentsRequest,
    ExponentsResponse,
    LeadingCheckRequest,
    LeadingCheckResponse,
    ReducedDetResponse,
    ScanRequest,
    ScanResponse,
    SchurCheckRequest,
    SchurCheckResponse,
    SigmaRequest,
    SigmaResponse,
    TeraoRequest,
    TeraoResponse,
    CertificateOut,
    LineReportOut,
    derivation_out,
    normalization_out,
    polynomial_out,
)
from .schur import schur_identity_check
from .terao import LineArrangement, terao_status


def divisor_from_input(data: DivisorInput) -> PointDivisor:
    points = [ProjPoint.from_str(p) for p in data.points]
    return normalize(points, data.mult)


def mult_from_list(values: list[int]) -> MultiplicityVector:
    return MultiplicityVector.sorted_from(values)


# -- handlers ----------------------------------------------------------------


def handle_exponents(request: ExponentsRequest) -> ExponentsResponse:
    divisor = divisor_from_input(request.divisor)
    pair = compute_exponents(divisor)
    tag = classify(divisor.mult)
    return ExponentsResponse(
        e1=pair.e1,
        e2=pair.e2,
        ntilde=divisor.total,
        case_tag=tag.tag.value,
        predicted=tag.predicted,
        basis=[derivation_out(t) for t in pair.basis],
        normalization=normalization_out(divisor),
    )


def handle_classify(request: ClassifyRequest) -> ClassifyResponse:
    mult = mult_from_list(request.mult)
    tag = classify(mult)
    return ClassifyResponse(
        case_tag=tag.tag.value, predicted=tag.predicted, ntilde=mult.total
    )


def handle_det(request: DetRequest) -> DetResponse:
    mult = mult_from_list(request.mult)
    det = _degeneracy_det(mult)
    return DetResponse(size=layout(mult).size, det=polynomial_out(det))


def handle_reduced_det(request: DetRequest) -> ReducedDetResponse:
    mult = mult_from_list(request.mult)
    return ReducedDetResponse(d1=polynomial_out(reduced_det(mult)))


def handle_degenerate(request: DegenerateRequest) -> DegenerateResponse:
    divisor = divisor_from_input(request.divisor)
    degenerate = is_degenerate(divisor)
    witness = degenerate_witness(divisor) if degenerate else None
    return DegenerateResponse(
        degenerate=degenerate,
        boundary_degree=divisor.total // 2 - 1,
        witness=derivation_out(witness) if witness else None,
    )


def handle_scan(request: ScanRequest) -> ScanResponse:
    mult = mult_from_list(request.mult)
    if request.grid is not None:
        grid = [parse_rational(v) for v in request.grid]
    else:
        grid = [Fraction(v) for v in range(request.lo, request.hi + 1)]
    report = scan_degenerations(mult, grid)
    return ScanResponse(
        d1=polynomial_out(report.d1),
        degenerate=[[format_rational(v) for v in tup] for tup in report.degenerate],
        non_arrangement_zeros=[
            [format_rational(v) for v in tup] for tup in report.non_arrangement_zeros
        ],
        divisibility=report.divisibility,
        points_scanned=report.points_scanned,
    )


def handle_sigma(request: SigmaRequest) -> SigmaResponse:
    return SigmaResponse(
        value=sigma(request.mr, request.u),
        closed_form=sigma_closed_form(request.mr, request.u),
        two_block_form=two_block_closed_form(request.mr, 2),
    )


def handle_leading_check(request: LeadingCheckRequest) -> LeadingCheckResponse:
    mult = mult_from_list(request.mult)
    result = leading_coefficient_check(mult)
    return LeadingCheckResponse(
        match=result.match,
        monomial=list(result.exponents),
        determinant_coeff=str(result.determinant_coeff),
        laplace_coeff=str(result.laplace_coeff),
        attaining_partitions=result.attaining_partitions,
    )


def handle_schur_check(request: SchurCheckRequest) -> SchurCheckResponse:
    mult = mult_from_list(request.mult)
    result = schur_identity_check(mult)
    return SchurCheckResponse(
        match=result.match, sign=result.sign, shape=(result.base, result.height)
    )


def handle_terao(request: TeraoRequest) -> TeraoResponse:
    arrangement = LineArrangement.from_strings(request.arrangement.lines)
    status = terao_status(arrangement)
    return TeraoResponse(
        guaranteed=status.guaranteed,
        certificates=[
            CertificateOut(
                kind=c.kind,
                line=c.line_index,
                class_id=c.class_id,
                point=c.point.serialize() if c.point else None,
                branch=c.branch,
            )
            for c in status.certificates
        ],
        lines=[
            LineReportOut(
                line=r.line_index,
                restriction=list(r.restriction),
                classes=list(r.classes),
            )
            for r in status.lines
        ],
    )


# -- HTTP layer ---------------------------------------------------------------

app = FastAPI(
    title="multiarr",
    version=__version__,
    description=(
        "Exact exponents, degeneration determinants and freeness "
        "certificates for multi-point divisors on the projective line."
    ),
)


@app.exception_handler(MultiarrError)
@app.exception_handler(ZeroDivisionError)
async def _domain_error(request: Request, exc: Exception) -> JSONResponse:
    body = ErrorResponse(error=error_code(exc), message=str(exc))
    return JSONResponse(status_code=400, content=body.model_dump())


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/exponents", response_model=ExponentsResponse, responses={400: {"model": ErrorResponse}})
def exponents_endpoint(request: ExponentsRequest) -> ExponentsResponse:
    return handle_exponents(request)


@app.post("/classify", response_model=ClassifyResponse, responses={400: {"model": ErrorResponse}})
def classify_endpoint(request: ClassifyRequest) -> ClassifyResponse:
    return handle_classify(request)


@app.post("/det", response_model=DetResponse, responses={400: {"model": ErrorResponse}})
def det_endpoint(request: DetRequest) -> DetResponse:
    return handle_det(request)


@app.post("/d1", response_model=ReducedDetResponse, responses={400: {"model": ErrorResponse}})
def d1_endpoint(request: DetRequest) -> ReducedDetResponse:
    return handle_reduced_det(request)


@app.post("/degenerate", response_model=DegenerateResponse, responses={400: {"model": ErrorResponse}})
def degenerate_endpoint(request: DegenerateRequest) -> DegenerateResponse:
    return handle_degenerate(request)


@app.post("/scan", response_model=ScanResponse, responses={400: {"model": ErrorResponse}})
def scan_endpoint(request: ScanRequest) -> ScanResponse:
    return handle_scan(request)


@app.post("/sigma", response_model=SigmaResponse, responses={400: {"model": ErrorResponse}})
def sigma_endpoint(request: SigmaRequest) -> SigmaResponse:
    return handle_sigma(request)


@app.post("/leading-check", response_model=LeadingCheckResponse, responses={400: {"model": ErrorResponse}})
def leading_check_endpoint(request: LeadingCheckRequest) -> LeadingCheckResponse:
    return handle_leading_check(request)


@app.post("/schur-check", response_model=SchurCheckResponse, responses={400: {"model": ErrorResponse}})
def schur_check_endpoint(request: SchurCheckRequest) -> SchurCheckResponse:
    return handle_schur_check(request)


@app.post("/terao", response_model=TeraoResponse, responses={400: {"model": ErrorResponse}})
def terao_endpoint(request: TeraoRequest) -> TeraoResponse:
    return handle_terao(request)
