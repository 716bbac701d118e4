"""
Argument parser for the lshape command line
"""
import argparse
from typing import Callable, List

from closedform import SCENARIOS
from config import OUTPUT_FORMATS

FIGURES = ("fig2", "fig3", "fig5", "fig6")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class UsageError(ValueError):
    """Arguments parse but do not make sense together"""


def _float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a dot-decimal number: {text!r}") from None


def float_list(count: int) -> Callable[[str], List[float]]:
    """Type for a comma-separated list of exactly `count` numbers"""

    def parse(text: str) -> List[float]:
        parts = [part.strip() for part in text.split(",")]
        if len(parts) != count:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {text!r}")
        return [_float(part) for part in parts]

    parse.__name__ = f"{count} numbers"
    return parse


def number_list(text: str) -> List[float]:
    """Type for a non-empty comma-separated list of numbers"""
    parts = [part.strip() for part in text.split(",") if part.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("expected at least one number")
    return [_float(part) for part in parts]


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="output format (default: $LSHAPE_FORMAT or text)")
    common.add_argument("--output", metavar="PATH", help="write the result here instead of standard output")
    common.add_argument(
        "--tol",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="override an oracle tolerance (repeatable)",
    )
    common.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, help="logging level on standard error")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Parser with the optimize, degenerate, analyze, sweep and check subcommands"""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="lshape",
        description="Minimal-envelope design of L-shaped buildings",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    # optimize sym | asym
    optimize = commands.add_parser("optimize", help="closed-form optimum for given constraints")
    shapes = optimize.add_subparsers(dest="shape", metavar="SHAPE", required=True)

    sym = shapes.add_parser("sym", parents=[common], help="symmetric plan (r = L/B > 1)")
    sym.add_argument("--volume", type=_float, required=True, metavar="V", help="volume in m³")
    sym_ratio = sym.add_mutually_exclusive_group(required=True)
    sym_ratio.add_argument("--ratio", type=_float, metavar="R", help="fixed aspect ratio L/B")
    sym_ratio.add_argument("--ratio-range", type=float_list(2), metavar="A,B", help="aspect ratio interval")

    asym = shapes.add_parser("asym", parents=[common], help="asymmetric plan (r_i = B_i/L_i < 1)")
    asym.add_argument("--volume", type=_float, required=True, metavar="V", help="volume in m³")
    asym_ratio = asym.add_mutually_exclusive_group(required=True)
    asym_ratio.add_argument("--ratios", type=float_list(2), metavar="R1,R2", help="fixed ratios B1/L1, B2/L2")
    asym_ratio.add_argument(
        "--ratio-ranges", type=float_list(4), metavar="A1,B1,A2,B2", help="intervals for r1 and r2"
    )
    asym.add_argument("--height", type=_float, metavar="H", help="prescribed height (only with --ratios)")

    degenerate = commands.add_parser("degenerate", parents=[common], help="cuboid optimum when only V is fixed")
    degenerate.add_argument("--volume", type=_float, required=True, metavar="V", help="volume in m³")

    analyze = commands.add_parser("analyze", parents=[common], help="compare measured buildings with their optima")
    analyze.add_argument("--input", required=True, metavar="PATH", help="JSON or CSV building specs")
    analyze.add_argument(
        "--input-format", choices=("json", "csv"), help="input format (default: from the file extension)"
    )
    analyze.add_argument("--threshold", type=_float, metavar="M2", help="near-optimal threshold in m² (default 2.0)")

    sweep = commands.add_parser("sweep", parents=[common], help="envelope grids behind the reference plots")
    sweep.add_argument("--figure", choices=FIGURES, required=True)
    sweep.add_argument("--volume", type=_float, metavar="V")
    sweep.add_argument("--ratio-values", type=number_list, metavar="R,...", help="fig2: ratios L/B")
    sweep.add_argument("--ratio-range", type=float_list(2), metavar="A,B", help="fig3: interval for L/B")
    sweep.add_argument("--ratios", type=float_list(2), metavar="R1,R2", help="fig5: ratios B1/L1, B2/L2")
    sweep.add_argument("--ratio-ranges", type=float_list(4), metavar="A1,B1,A2,B2", help="fig6: ratio box")
    sweep.add_argument("--x-range", type=float_list(2), metavar="LO,HI", help="range of the first axis")
    sweep.add_argument("--y-range", type=float_list(2), metavar="LO,HI", help="fig5: range of L2")
    sweep.add_argument("--points", type=positive_int, metavar="N", help="samples per continuous axis")

    check = commands.add_parser("check", parents=[common], help="verify closed forms against the numerical oracle")
    check.add_argument("--scenario", choices=sorted(SCENARIOS) + ["all"], default="all")
    check.add_argument("--trials", type=positive_int, default=100, metavar="N", help="instances per scenario")
    check.add_argument("--seed", type=int, metavar="S", help="random seed (required when $CI is set)")
    check.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)

    return parser
