"""
Command-line entry point: one subcommand per experiment kind plus ``diff``.

Exit status: 0 when every check passed, 1 when a check failed or a baseline
drifted, 2 on a usage error (invalid configuration or arguments).
"""
import argparse
import logging
import sys
from typing import Dict, List, Optional

from poroshock.__version__ import __version__
from poroshock.core.config import configure_settings, get_settings
from poroshock.core.exceptions import ConfigError, LabError, SchemaMismatchError
from poroshock.core.logging import configure_logging
from poroshock.core.runner import run_experiment
from poroshock.schemas.experiment import load_config
from poroshock.utilities.artifacts import write_json
from poroshock.utilities.baseline import compare_baseline

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

KINDS = ("profile", "evolve", "decay", "semigroup", "inequalities", "regularized", "report")


def _seed(value: str) -> int:
    seed = int(value, 0)
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {value}")
    return seed


def _tolerance(value: str) -> Dict[str, float]:
    column, _, tol = value.partition("=")
    if not column or not tol:
        raise argparse.ArgumentTypeError(f"expected COLUMN=TOL, got {value}")
    return {column: float(tol)}


def _positive(value: str) -> int:
    count = int(value)
    if count < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return count


def _apply_settings(args: argparse.Namespace) -> None:
    """Install the lab settings with the global flags applied."""
    updates = {}
    if args.log_level:
        updates["LOG_LEVEL"] = args.log_level.upper()
    if args.workers:
        updates["MAX_WORKERS"] = args.workers
    if updates:
        configure_settings(get_settings().model_copy(update=updates))
    configure_logging()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="poroshock",
        description="Numerical laboratory for viscous shock waves of u_t + f(u)_x = (u^m)_xx",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL (DEBUG, INFO, ...)")
    parser.add_argument("--workers", type=_positive, default=None, help="Override MAX_WORKERS")
    commands = parser.add_subparsers(dest="command", required=True)

    for kind in KINDS:
        sub = commands.add_parser(kind, help=f"Run the {kind} experiment")
        sub.add_argument("--config", help="TOML experiment configuration")
        sub.add_argument("--out", help="Output directory (default: runs/<kind>)")
        sub.add_argument("--seed", type=_seed, help="Unsigned 64-bit experiment seed")
        sub.add_argument("--dx", type=float, help="Grid spacing")
        sub.add_argument("--m", type=float, help="Diffusion exponent")
        sub.add_argument("--t-end", dest="t_end", type=float, help="Run horizon")

    diff = commands.add_parser("diff", help="Compare an artifact directory against a baseline")
    diff.add_argument("current", help="Directory with the new artifacts")
    diff.add_argument("baseline", help="Baseline directory")
    diff.add_argument(
        "--tol", action="append", type=_tolerance, default=[], metavar="COLUMN=TOL",
        help="Absolute tolerance of one column; '*' sets the default (repeatable)",
    )
    diff.add_argument("--out", help="Write the diff report to this JSON file")
    return parser


def _run(args: argparse.Namespace) -> int:
    overrides = {"seed": args.seed, "grid.dx": args.dx, "m": args.m, "t_end": args.t_end}
    config = load_config(args.config, kind=args.command, overrides=overrides)
    summary = run_experiment(config, args.out)
    for check in summary.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status} {check.name} {'' if check.value is None else f'{check.value:.6g}'}".rstrip())
    return EXIT_OK if summary.passed else EXIT_FAILED


def _diff(args: argparse.Namespace) -> int:
    tolerances: Dict[str, float] = {}
    for entry in args.tol:
        tolerances.update(entry)
    report = compare_baseline(args.current, args.baseline, tolerances)
    if args.out:
        write_json(report, args.out)
    for drift in report.drifts:
        print(f"DRIFT {drift.file} {drift.column} {drift.max_abs_diff:.6g} > {drift.tolerance:.3g}")
    for name in report.missing_files:
        print(f"MISSING {name}")
    print(f"{len(report.compared_files)} files compared, {'clean' if report.clean else 'drift found'}")
    return EXIT_OK if report.clean else EXIT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_settings(args)
    try:
        if args.command == "diff":
            return _diff(args)
        return _run(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        for field, message in e.fields.items():
            print(f"  {field}: {message}", file=sys.stderr)
        return EXIT_USAGE
    except SchemaMismatchError as e:
        logger.error(f"Baseline schema mismatch: {e}")
        return EXIT_FAILED
    except LabError as e:
        logger.error(f"{type(e).__name__}: {e}", exc_info=True)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
