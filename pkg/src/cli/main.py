"""
src/cli/main.py
Command-line front end.

  python -m src.cli dist     --domain disk --metric b --p 2 --z1 0.3,0 --z2 0.5,0
  python -m src.cli levelset --domain disk --center 0.3,0 --levels 0.4,0.6,0.8,1 --grid 200
  python -m src.cli verify   --suite sandwich --trials 10000 --seed 7
  python -m src.cli search   --conjecture artanh --trials 100000 --seed 1
  python -m src.cli phi      --K 2 --r 0.5

JSON and CSV go to stdout, diagnostics to stderr.
Exit codes: 0 ok, 1 bad arguments, 2 invalid request, 3 failed suite.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Iterable, NoReturn

from src.barrlund.exponent import PExponent
from src.cli.levelset import METRICS, LevelSetRequest, level_polylines, metric_evaluator, write_csv
from src.geometry.domains import (
    Domain,
    ExteriorUnitDisk,
    PuncturedPlane,
    UnitDisk,
    UpperHalfPlane,
    load_polygon,
    parse_point,
)
from src.mobius_qc.distortion import DistortionQuery
from src.utils.errors import BarrlundError, BadConfigurationError
from src.utils.logger import get_logger, set_level
from src.validation.report import VerificationReport
from src.validation.suites import SUITES, run_suite

log = get_logger("cli")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_FAILED = 3

DOMAINS = ("disk", "halfplane", "exterior", "punctured", "polygon")
CONJECTURES = ("artanh", "mobius")


class CliParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; this front end reserves 2 for invalid requests."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ── Argument types ────────────────────────────────────────────────

def _point(text: str) -> complex:
    try:
        return parse_point(text)
    except BarrlundError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _exponent_text(text: str) -> str:
    """Syntax only; the range check happens when the request is built."""
    if text.strip().lower() in ("inf", "infinity", "∞"):
        return text
    try:
        float(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"p must be a decimal or 'inf', got {text!r}") from e
    return text


def _levels(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"levels must be a comma list of numbers, got {text!r}") from e


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from e
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def build_domain(args: argparse.Namespace) -> Domain:
    match args.domain:
        case "disk":
            return UnitDisk()
        case "halfplane":
            return UpperHalfPlane()
        case "exterior":
            return ExteriorUnitDisk()
        case "punctured":
            return PuncturedPlane(center=args.puncture)
        case "polygon":
            if not args.polygon:
                raise BadConfigurationError("--domain polygon needs --polygon path.json")
            return load_polygon(args.polygon)
    raise BadConfigurationError(f"Unknown domain {args.domain!r}")


# ── Subcommands ───────────────────────────────────────────────────

def cmd_dist(args: argparse.Namespace) -> int:
    d = build_domain(args)
    evaluate = metric_evaluator(args.metric, d, PExponent.parse(args.p))
    result = evaluate(args.z1, args.z2)
    print(json.dumps(result.to_dict()))
    return EXIT_OK


def cmd_levelset(args: argparse.Namespace) -> int:
    req = LevelSetRequest(
        domain=build_domain(args),
        metric=args.metric,
        p=PExponent.parse(args.p),
        center=args.center,
        levels=args.levels,
        grid=args.grid,
    )
    write_csv(level_polylines(req), sys.stdout)
    return EXIT_OK


def _emit(reports: Iterable[VerificationReport], timing: bool) -> int:
    """Stream one JSON line per report as soon as it is ready."""
    failed = []
    for report in reports:
        print(report.to_json(include_runtime=timing), flush=True)
        if not report.passed:
            failed.append(report.suite)
    if failed:
        log.error(f"Failed suites: {', '.join(failed)}")
        return EXIT_FAILED
    return EXIT_OK


def _check_trials(trials: int) -> None:
    if trials < 1:
        raise BadConfigurationError(f"--trials must be >= 1, got {trials}")


def cmd_verify(args: argparse.Namespace) -> int:
    _check_trials(args.trials)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    return _emit((run_suite(name, args.trials, args.seed) for name in names), args.timing)


def cmd_search(args: argparse.Namespace) -> int:
    _check_trials(args.trials)
    report = run_suite(f"conjecture-{args.conjecture}", args.trials, args.seed)
    return _emit([report], args.timing)


def cmd_phi(args: argparse.Namespace) -> int:
    query = DistortionQuery(args.K, args.r)
    print(json.dumps({"K": query.K, "r": query.r, "phi": query.phi, "bound": query.bound}))
    return EXIT_OK


# ── Parser ────────────────────────────────────────────────────────

def _domain_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--domain", choices=DOMAINS, default="disk")
    sub.add_argument("--puncture", type=_point, default=0j, help="Missing point of the punctured plane (x,y)")
    sub.add_argument("--polygon", default=None, help="Polygon JSON file for --domain polygon")
    sub.add_argument("--metric", choices=METRICS, default="b")
    sub.add_argument("--p", type=_exponent_text, default="2", help="Exponent: decimal >= 1 or 'inf'")


def _run_flags(sub: argparse.ArgumentParser, default_trials: int) -> None:
    sub.add_argument("--trials", type=int, default=default_trials)
    sub.add_argument("--seed", type=int, default=1)
    sub.add_argument("--timing", action="store_true", help="Report measured runtime_ms")


def build_parser() -> CliParser:
    parser = CliParser(prog="barrlund", description="Barrlund distance toolkit")
    parser.add_argument("--log-level", default=None, choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    subs = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    dist = subs.add_parser("dist", help="Distance between two points")
    _domain_flags(dist)
    dist.add_argument("--z1", type=_point, required=True)
    dist.add_argument("--z2", type=_point, required=True)
    dist.set_defaults(handler=cmd_dist)

    levelset = subs.add_parser("levelset", help="Level-set polylines as CSV")
    _domain_flags(levelset)
    levelset.add_argument("--center", type=_point, default=0j)
    levelset.add_argument("--levels", type=_levels, required=True)
    levelset.add_argument("--grid", type=int, default=200)
    levelset.set_defaults(handler=cmd_levelset)

    verify = subs.add_parser("verify", help="Run verification suites")
    verify.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    _run_flags(verify, 1000)
    verify.set_defaults(handler=cmd_verify)

    search = subs.add_parser("search", help="Counterexample search for an open statement")
    search.add_argument("--conjecture", choices=CONJECTURES, required=True)
    _run_flags(search, 100_000)
    search.set_defaults(handler=cmd_search)

    phi = subs.add_parser("phi", help="Distortion function and its explicit bound")
    phi.add_argument("--K", type=_finite, required=True)
    phi.add_argument("--r", type=_finite, required=True)
    phi.set_defaults(handler=cmd_phi)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        set_level(args.log_level)
    try:
        return args.handler(args)
    except (BarrlundError, FileNotFoundError) as e:
        log.error(f"{type(e).__name__}: {e}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
