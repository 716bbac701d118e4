"""
Subcommand handlers

Every handler takes the parsed arguments and the CliConfig, writes its
result to the configured output and returns the exit status.
"""
import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List

import numpy as np

from casestudy import analyze_batch, parse_specs, render_reports
from closedform import (
    SCENARIOS,
    OptimizationResult,
    RatioInterval,
    detect_degenerate_cuboid,
    optimize_asym_fixed_height,
    optimize_asym_fixed_ratios,
    optimize_asym_ratio_box,
    optimize_sym_fixed_ratio,
    optimize_sym_ratio_interval,
)
from config import CliConfig, ConfigError
from geometry import AsymRatios, SymRatio
from oracle import TrialRunner, TrialSummary
from utils import fmt_exact, fmt_fixed
from .parser import UsageError
from .sweep import SweepOverrides, build_sweep

logger = logging.getLogger(__name__)

# relative error injected by `check --perturb`
PERTURBATION = 1e-3
CUBOID_WARNING = "WARNING: the L-form is lost, the minimal envelope belongs to a cuboid (L = B)"


def emit(payload: bytes, config: CliConfig) -> None:
    """Write to config.output_path, or standard output"""
    if config.output_path:
        Path(config.output_path).write_bytes(payload)
        logger.info(f"✅ Wrote {len(payload)} bytes to {config.output_path}")
    else:
        sys.stdout.write(payload.decode("utf-8"))
        sys.stdout.flush()


def _dims_dict(result: OptimizationResult) -> Dict[str, float]:
    d = result.dims
    names = ("L", "B", "H") if result.is_symmetric else ("L1", "L2", "B1", "B2", "H")
    return {name: getattr(d, name) for name in names}


def _ratios_dict(result: OptimizationResult) -> Dict[str, float]:
    d = result.dims
    if result.is_symmetric:
        return {"r": d.L / d.B}
    return {"r1": d.B1 / d.L1, "r2": d.B2 / d.L2}


def render_result(result: OptimizationResult, fmt: str) -> bytes:
    """Dimensions, envelope, active constraints and degeneracy flag of one optimum"""
    dims = _dims_dict(result)
    ratios = _ratios_dict(result)
    active = [str(c) for c in result.active_constraints]

    if fmt == "json":
        payload = {
            "scenario": result.scenario.value,
            "volume": result.input_volume,
            "dims": dims,
            "ratios": ratios,
            "envelope": result.envelope,
            "active_constraints": active,
            "degenerate": result.degenerate,
            "display": {
                "dims": {k: float(fmt_fixed(v, 2)) for k, v in dims.items()},
                "envelope": float(fmt_fixed(result.envelope, 2)),
            },
        }
        return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")

    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["scenario", "V", *dims, *ratios, "S", "active_constraints", "degenerate"])
        writer.writerow(
            [result.scenario.value, fmt_exact(result.input_volume)]
            + [fmt_exact(v) for v in dims.values()]
            + [fmt_exact(v) for v in ratios.values()]
            + [fmt_exact(result.envelope), ";".join(active), str(result.degenerate).lower()]
        )
        return buffer.getvalue().encode("utf-8")

    lines = [
        f"Scenario: {result.scenario.value}",
        f"V = {fmt_fixed(result.input_volume, 2)} m³",
        "Dimensions: " + ", ".join(f"{k} = {fmt_fixed(v, 2)} m" for k, v in dims.items()),
        "Ratios: " + ", ".join(f"{k} = {fmt_fixed(v, 2)}" for k, v in ratios.items()),
        f"S = {fmt_fixed(result.envelope, 2)} m²",
        f"Active constraints: {', '.join(active) if active else 'none'}",
        f"Degenerate: {'yes' if result.degenerate else 'no'}",
    ]
    if result.degenerate:
        lines.append(CUBOID_WARNING)
    return ("\n".join(lines) + "\n").encode("utf-8")


def cmd_optimize(args: argparse.Namespace, config: CliConfig) -> int:
    """optimize sym|asym"""
    if args.shape == "sym":
        if args.ratio is not None:
            result = optimize_sym_fixed_ratio(args.volume, SymRatio(args.ratio))
        else:
            result = optimize_sym_ratio_interval(args.volume, RatioInterval(*args.ratio_range))
    else:
        if args.ratios is not None:
            ratios = AsymRatios(*args.ratios)
            if args.height is not None:
                result = optimize_asym_fixed_height(args.volume, args.height, ratios)
            else:
                result = optimize_asym_fixed_ratios(args.volume, ratios)
        else:
            if args.height is not None:
                raise UsageError("--height combines with --ratios only, not with --ratio-ranges")
            a1, b1, a2, b2 = args.ratio_ranges
            result = optimize_asym_ratio_box(args.volume, RatioInterval(a1, b1), RatioInterval(a2, b2))

    logger.info(f"✅ {result.scenario.value}: S = {result.envelope:.6g} m²")
    emit(render_result(result, config.output_format), config)
    return 0


def cmd_degenerate(args: argparse.Namespace, config: CliConfig) -> int:
    """degenerate --volume V"""
    result = detect_degenerate_cuboid(args.volume)
    emit(render_result(result, config.output_format), config)
    return 0


def _input_format(args: argparse.Namespace) -> str:
    if args.input_format:
        return args.input_format
    suffix = Path(args.input).suffix.lower().lstrip(".")
    if suffix not in ("json", "csv"):
        raise UsageError(f"cannot tell the format of {args.input!r} from its extension; pass --input-format")
    return suffix


def cmd_analyze(args: argparse.Namespace, config: CliConfig) -> int:
    """analyze --input PATH"""
    fmt = _input_format(args)
    with open(args.input, "rb") as stream:
        specs = parse_specs(stream, fmt)
    reports = analyze_batch(specs, config.near_optimal_threshold)
    emit(render_reports(reports, config.output_format), config)
    return 0


def cmd_sweep(args: argparse.Namespace, config: CliConfig) -> int:
    """sweep --figure ID [overrides]"""
    overrides = SweepOverrides(
        volume=args.volume,
        ratio_values=args.ratio_values,
        ratio_range=args.ratio_range,
        ratios=args.ratios,
        ratio_ranges=args.ratio_ranges,
        x_range=args.x_range,
        y_range=args.y_range,
        points=args.points,
    )
    grid = build_sweep(args.figure, overrides)
    text = {"csv": grid.to_csv, "json": grid.to_json, "text": grid.to_text}[config.output_format]()
    emit(text.encode("utf-8"), config)
    return 0


def _summary_dict(summary: TrialSummary) -> Dict[str, object]:
    return {
        "scenario": summary.scenario,
        "trials": summary.trials,
        "failures": summary.failures,
        "worst_point_error": summary.worst_point_error,
        "worst_objective_error": summary.worst_objective_error,
        "worst_kkt_stationarity": summary.worst_stationarity,
        "passed": summary.passed,
    }


CHECK_CSV_COLUMNS = [
    "scenario",
    "trials",
    "failures",
    "worst_point_error",
    "worst_objective_error",
    "worst_kkt_stationarity",
    "passed",
]


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return fmt_exact(value)
    return str(value)


def _render_check(summaries: List[TrialSummary], runner: TrialRunner, seed: int, fmt: str) -> bytes:
    if fmt == "json":
        payload = {
            "seed": seed,
            "passed": all(s.passed for s in summaries),
            "scenarios": [_summary_dict(s) for s in summaries],
        }
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["seed"] + CHECK_CSV_COLUMNS)
        for summary in summaries:
            row = _summary_dict(summary)
            writer.writerow([seed] + [_csv_cell(row[column]) for column in CHECK_CSV_COLUMNS])
        return buffer.getvalue().encode("utf-8")
    status = "all trials agree" if all(s.passed for s in summaries) else "DISAGREEMENT"
    return f"Seed: {seed}\n{runner.get_summary(summaries)}\nResult: {status}\n".encode("utf-8")


def cmd_check(args: argparse.Namespace, config: CliConfig) -> int:
    """check --scenario NAME|all --trials N --seed S"""
    if args.seed is None and config.require_seed:
        raise ConfigError("check needs an explicit --seed when CI is set")
    seed = args.seed if args.seed is not None else int(np.random.SeedSequence().entropy % 2 ** 32)
    logger.info(f"check: scenario {args.scenario}, {args.trials} trial(s) each, seed {seed}")

    names = sorted(SCENARIOS) if args.scenario == "all" else [args.scenario]
    runner = TrialRunner(config.tolerances, perturbation=PERTURBATION if args.perturb else 0.0)
    rng = np.random.default_rng(seed)
    for name in names:
        runner.add_trials(SCENARIOS[name], args.trials, rng)

    summaries = runner.summarize(runner.run())
    emit(_render_check(summaries, runner, seed, config.output_format), config)
    return 0 if all(s.passed for s in summaries) else 1


HANDLERS = {
    "optimize": cmd_optimize,
    "degenerate": cmd_degenerate,
    "analyze": cmd_analyze,
    "sweep": cmd_sweep,
    "check": cmd_check,
}
