"""Command-line client for the computation service.

Each subcommand builds the same request model the HTTP endpoints accept and
runs it in-process by default; pass --url to send it to a running server
instead.  Output is a single JSON document on stdout, byte-for-byte
deterministic for identical inputs.  Exit codes: 0 success, 1 computation
error, 2 malformed request.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from pydantic import BaseModel, ValidationError

from . import __version__
from .errors import error_code
from .schemas import (
    ClassifyRequest,
    DegenerateRequest,
    DetRequest,
    ExponentsRequest,
    LeadingCheckRequest,
    ScanRequest,
    SchurCheckRequest,
    SigmaRequest,
    TeraoRequest,
)
from . import service

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_SCHEMA = 2

_HANDLERS = {
    "exponents": (ExponentsRequest, service.handle_exponents),
    "classify": (ClassifyRequest, service.handle_classify),
    "det": (DetRequest, service.handle_det),
    "d1": (DetRequest, service.handle_reduced_det),
    "degenerate": (DegenerateRequest, service.handle_degenerate),
    "scan": (ScanRequest, service.handle_scan),
    "sigma": (SigmaRequest, service.handle_sigma),
    "leading-check": (LeadingCheckRequest, service.handle_leading_check),
    "schur-check": (SchurCheckRequest, service.handle_schur_check),
    "terao": (TeraoRequest, service.handle_terao),
}


def _dump(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _emit(model: BaseModel) -> None:
    sys.stdout.write(_dump(model.model_dump(by_alias=True, mode="json")))


def _emit_error(code: str, message: str) -> None:
    sys.stdout.write(_dump({"error": code, "message": message}))


def _csv_ints(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _csv_strs(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _divisor_payload(args: argparse.Namespace) -> dict:
    if args.divisor:
        return {"divisor": json.loads(Path(args.divisor).read_text())}
    if args.mult and args.points:
        return {"divisor": {"points": _csv_strs(args.points), "mult": _csv_ints(args.mult)}}
    raise _usage_error("need --divisor FILE or both --mult and --points")


def _usage_error(message: str) -> SystemExit:
    _emit_error("schema_violation", message)
    return SystemExit(EXIT_SCHEMA)


def _build_payload(args: argparse.Namespace) -> dict:
    command = args.command
    if args.json_in:
        return json.load(sys.stdin)
    if command in ("exponents", "degenerate"):
        return _divisor_payload(args)
    if command in ("classify", "det", "d1", "leading-check", "schur-check"):
        if not args.mult:
            raise _usage_error("--mult is required")
        return {"mult": _csv_ints(args.mult)}
    if command == "scan":
        if not args.mult:
            raise _usage_error("--mult is required")
        payload: dict = {"mult": _csv_ints(args.mult), "lo": args.lo, "hi": args.hi}
        if args.grid:
            payload["grid"] = _csv_strs(args.grid)
        return payload
    if command == "sigma":
        return {"mr": args.mr, "u": args.u}
    if command == "terao":
        if not args.arrangement:
            raise _usage_error("--arrangement FILE is required")
        return {"arrangement": json.loads(Path(args.arrangement).read_text())}
    raise _usage_error(f"unknown command {command}")


def _run_remote(url: str, command: str, payload: dict) -> int:
    import httpx

    response = httpx.post(f"{url.rstrip('/')}/{command}", json=payload)
    try:
        body = response.json()
    except ValueError:
        _emit_error("internal_error", f"non-JSON response (HTTP {response.status_code})")
        return EXIT_COMPUTATION
    sys.stdout.write(_dump(body))
    if response.status_code == 200:
        return EXIT_OK
    return EXIT_SCHEMA if response.status_code == 422 else EXIT_COMPUTATION


def _run_local(command: str, payload: dict) -> int:
    request_model, handler = _HANDLERS[command]
    try:
        request = request_model.model_validate(payload)
    except ValidationError as exc:
        _emit_error("schema_violation", str(exc))
        return EXIT_SCHEMA
    try:
        response = handler(request)
    except Exception as exc:  # mapped to a structured error, never a traceback
        _emit_error(error_code(exc), str(exc))
        return EXIT_COMPUTATION
    _emit(response)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json-in", action="store_true", help="read the request JSON from stdin")
    parser.add_argument("--url", help="send the request to a running service instead of computing in-process")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiarr",
        description="Exact exponents and degeneration data for point divisors on the projective line.",
    )
    parser.add_argument("--version", action="version", version=f"multiarr {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [
        ("exponents", "exponents of a divisor, with a certifying basis"),
        ("degenerate", "does the smaller exponent degenerate at this configuration"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--divisor", help="JSON file with {points, mult}")
        p.add_argument("--mult", help="comma-separated multiplicities (with --points)")
        p.add_argument("--points", help="comma-separated points, rationals or 'inf'")
        _add_common(p)

    for name, help_text in [
        ("classify", "closed-form case of a multiplicity vector"),
        ("det", "symbolic degeneration determinant"),
        ("d1", "reduced degeneration determinant"),
        ("leading-check", "leading coefficient vs. partition sum"),
        ("schur-check", "reduced determinant vs. rectangular Schur polynomial"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--mult", help="comma-separated multiplicities")
        _add_common(p)

    p = sub.add_parser("scan", help="evaluate the reduced determinant over a grid")
    p.add_argument("--mult", help="comma-separated multiplicities")
    p.add_argument("--lo", type=int, default=-3, help="grid lower bound (default -3)")
    p.add_argument("--hi", type=int, default=3, help="grid upper bound (default 3)")
    p.add_argument("--grid", help="explicit comma-separated rational grid values")
    _add_common(p)

    p = sub.add_parser("sigma", help="alternating partition sum and its closed forms")
    p.add_argument("--mr", type=int, required=True, help="multiplicity of the first block (>= 2)")
    p.add_argument("--u", type=int, required=True, help="number of blocks (>= 2)")
    _add_common(p)

    p = sub.add_parser("terao", help="freeness certificates for a line arrangement")
    p.add_argument("--arrangement", help="JSON file with {lines: [[a,b,c], ...]}")
    _add_common(p)

    p = sub.add_parser("schema", help="print the JSON schemas of all requests and responses")
    p.add_argument("--url", help=argparse.SUPPRESS)
    p.add_argument("--json-in", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def request_schemas() -> dict:
    """Machine-readable schemas for every endpoint (also shipped as schemas.json)."""
    from . import schemas as s

    endpoints = {
        "exponents": (s.ExponentsRequest, s.ExponentsResponse),
        "classify": (s.ClassifyRequest, s.ClassifyResponse),
        "det": (s.DetRequest, s.DetResponse),
        "d1": (s.DetRequest, s.ReducedDetResponse),
        "degenerate": (s.DegenerateRequest, s.DegenerateResponse),
        "scan": (s.ScanRequest, s.ScanResponse),
        "sigma": (s.SigmaRequest, s.SigmaResponse),
        "leading-check": (s.LeadingCheckRequest, s.LeadingCheckResponse),
        "schur-check": (s.SchurCheckRequest, s.SchurCheckResponse),
        "terao": (s.TeraoRequest, s.TeraoResponse),
    }
    return {
        "version": __version__,
        "error": s.ErrorResponse.model_json_schema(),
        "endpoints": {
            name: {
                "request": req.model_json_schema(),
                "response": resp.model_json_schema(),
            }
            for name, (req, resp) in endpoints.items()
        },
    }


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "schema":
        sys.stdout.write(_dump(request_schemas()))
        return EXIT_OK
    if args.command == "serve":
        import uvicorn

        uvicorn.run(service.app, host=args.host, port=args.port)
        return EXIT_OK

    try:
        payload = _build_payload(args)
    except SystemExit as exc:
        return int(exc.code or EXIT_SCHEMA)
    except (OSError, json.JSONDecodeError) as exc:
        _emit_error("schema_violation", str(exc))
        return EXIT_SCHEMA

    if args.url:
        return _run_remote(args.url, args.command, payload)
    return _run_local(args.command, payload)


if __name__ == "__main__":
    sys.exit(main())
