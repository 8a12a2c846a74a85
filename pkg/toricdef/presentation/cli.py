"""Command line front end.

Every subcommand prints one JSON run report on stdout; logs and errors go to
stderr. Exit codes: 0 success, 1 verification mismatch or computation error,
2 input error.
"""

import argparse
import asyncio
import hashlib
import json
import sys
import time
from collections.abc import Sequence
from datetime import UTC, datetime
from typing import Any

from pydantic import BaseModel

from toricdef import __version__
from toricdef.application.use_cases.deformation import DeformationUseCases
from toricdef.application.use_cases.gorenstein import GorensteinUseCases
from toricdef.application.use_cases.verification import VerificationUseCases
from toricdef.core.config import settings
from toricdef.core.exceptions import ToricError
from toricdef.core.logging import get_logger, setup_logging
from toricdef.domain.entities.report import RunReport
from toricdef.presentation.dependencies.repositories import (
    get_fixture_repository,
    get_input_repository,
)
from toricdef.presentation.schemas.common import ErrorResponse, json_safe
from toricdef.presentation.schemas.cone import (
    CupResponse,
    HilbertResponse,
    ScanResponse,
    T1Response,
    T2Response,
)
from toricdef.presentation.schemas.gorenstein import GorensteinResponse
from toricdef.presentation.schemas.verification import VerificationResponse

logger = get_logger(__name__)


def parse_vector(text: str) -> tuple[int, ...]:
    """Parse "1,-2,3" into (1, -2, 3)."""
    try:
        return tuple(int(part) for part in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"not a comma-separated integer vector: {text!r}"
        )


def _digest(payload: dict[str, Any]) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _echo(kind: str, payload: dict[str, Any], **extra: Any) -> dict[str, Any]:
    return {kind: payload, "sha256": _digest(payload), **extra}


def _dump(response: BaseModel) -> dict[str, Any]:
    return response.model_dump(mode="json", by_alias=True)


async def _run_cone_command(args: argparse.Namespace) -> tuple[dict, dict, None]:
    use_cases = DeformationUseCases(get_input_repository())
    cone = await use_cases.load_cone(args.cone)
    payload = cone.to_payload()

    if args.command == "hilbert":
        basis = await use_cases.hilbert(cone)
        response = HilbertResponse.from_domain(cone, basis)
        return _echo("cone", payload), _dump(response), None
    if args.command == "t1":
        piece = await use_cases.t1(cone, args.degree)
        echo = _echo("cone", payload, degree=list(args.degree))
        return echo, _dump(T1Response.from_domain(piece)), None
    if args.command == "t2":
        piece, span = await use_cases.t2(cone, args.degree)
        echo = _echo("cone", payload, degree=list(args.degree))
        return echo, _dump(T2Response.from_domain(piece, span)), None
    if args.command == "scan":
        result = await use_cases.scan(cone, args.bound)
        echo = _echo("cone", payload, bound=result.bound)
        return echo, _dump(ScanResponse.from_domain(result)), None

    result = await use_cases.cup(
        cone, args.degR, args.degS, args.phi_index, args.psi_index, args.anchor
    )
    echo = _echo(
        "cone",
        payload,
        degR=list(args.degR),
        degS=list(args.degS),
        phi_index=args.phi_index,
        psi_index=args.psi_index,
    )
    return echo, _dump(CupResponse.from_domain(result)), None


async def _run_gorenstein(args: argparse.Namespace) -> tuple[dict, dict, bool | None]:
    use_cases = GorensteinUseCases(get_input_repository())
    polygon = await use_cases.load_polygon(args.polygon)
    report = await use_cases.analyze(polygon, args.kmax, args.verify)
    verified = report.verification.all_match if report.verification else None
    echo = _echo("polygon", polygon.to_payload(), kmax=args.kmax)
    return echo, _dump(GorensteinResponse.from_domain(report)), verified


async def _run_verify_all(args: argparse.Namespace) -> tuple[dict, dict, bool]:
    use_cases = VerificationUseCases(get_fixture_repository())
    report = await use_cases.verify_all(args.seed)
    echo = {"fixtures": "built-in", "seed": report.seed}
    return echo, _dump(VerificationResponse.from_domain(report)), report.all_passed


async def run(args: argparse.Namespace) -> RunReport:
    """Execute one subcommand and assemble its report."""
    started = time.perf_counter()
    logger.info("Running command", command=args.command)
    if args.command == "gorenstein":
        echo, result, verified = await _run_gorenstein(args)
    elif args.command == "verify-all":
        echo, result, verified = await _run_verify_all(args)
    else:
        echo, result, verified = await _run_cone_command(args)
    elapsed = round(time.perf_counter() - started, 6)
    logger.info("Finished command", command=args.command, verified=verified)
    return RunReport(
        command=args.command,
        version=__version__,
        input=echo,
        result=result,
        verified=verified,
        timing_seconds=elapsed,
    )


def render(document: dict[str, Any], pretty: bool) -> str:
    return json.dumps(json_safe(document), indent=2 if pretty else None)


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    mode = output.add_mutually_exclusive_group()
    mode.add_argument(
        "--json",
        dest="pretty",
        action="store_false",
        default=False,
        help="compact JSON (default)",
    )
    mode.add_argument(
        "--pretty", dest="pretty", action="store_true", help="indented JSON"
    )
    output.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help=f"log level on stderr (default {settings.LOG_LEVEL})",
    )

    parser = argparse.ArgumentParser(
        prog="toricdef",
        description="Graded T1, T2 and cup products of affine toric varieties.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    cone_help = "cone JSON file or fixture:<name>"
    hilbert = commands.add_parser("hilbert", parents=[output], help="Hilbert basis E")
    hilbert.add_argument("--cone", required=True, help=cone_help)

    for name, summary in (("t1", "T1(-R)"), ("t2", "T2(-R)")):
        sub = commands.add_parser(name, parents=[output], help=summary)
        sub.add_argument("--cone", required=True, help=cone_help)
        sub.add_argument(
            "--degree", required=True, type=parse_vector, help="R, e.g. 0,0,1"
        )

    scan = commands.add_parser("scan", parents=[output], help="degree scan")
    scan.add_argument("--cone", required=True, help=cone_help)
    scan.add_argument("--bound", type=int, default=None, help="lower height bound B")

    cup = commands.add_parser("cup", parents=[output], help="cup product")
    cup.add_argument("--cone", required=True, help=cone_help)
    cup.add_argument("--degR", required=True, type=parse_vector, help="degree R of phi")
    cup.add_argument("--degS", required=True, type=parse_vector, help="degree S of psi")
    cup.add_argument("--phi-index", type=int, default=0, help="basis index in T1(-R)")
    cup.add_argument("--psi-index", type=int, default=0, help="basis index in T1(-S)")
    cup.add_argument("--anchor", choices=["min", "max"], default="min")

    gorenstein = commands.add_parser(
        "gorenstein", parents=[output], help="cone over a lattice polygon"
    )
    gorenstein.add_argument(
        "--polygon", required=True, help="polygon JSON file or fixture:<name>"
    )
    gorenstein.add_argument(
        "--kmax", type=int, default=4, help="largest k for T2(-kR*)"
    )
    gorenstein.add_argument(
        "--verify", action="store_true", help="compare with the general machinery"
    )

    verify = commands.add_parser(
        "verify-all", parents=[output], help="acceptance suite on built-in fixtures"
    )
    verify.add_argument(
        "--seed", type=int, default=None, help="seed of the random trials"
    )
    return parser


def _error_document(error: ToricError) -> dict[str, Any]:
    detail = ", ".join(f"{key}={value}" for key, value in error.context.items())
    return ErrorResponse(
        error=error.code,
        message=error.message,
        detail=detail or None,
        timestamp=datetime.now(UTC).isoformat(),
    ).model_dump()


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    try:
        report = asyncio.run(run(args))
    except ToricError as e:
        logger.error("Command failed", command=args.command, error=e.code)
        print(render(_error_document(e), args.pretty), file=sys.stderr)
        return e.exit_code
    print(render(report.model_dump(), args.pretty))
    return 1 if report.verified is False else 0


if __name__ == "__main__":
    sys.exit(main())
