"""
Text, JSON and CSV rendering of comparison reports

Text prints lengths with 2 decimals and areas/volumes with 1 decimal,
rounded half-up. JSON carries full precision under `exact` and the
2-decimal rounding under `display`.
"""
import csv
import io
import json
from typing import Dict, List, Sequence

from closedform import OptimizationResult
from utils import fmt_exact, fmt_fixed, round_half_up
from .analysis import ComparisonReport

REPORT_FORMATS = ("text", "json", "csv")
CSV_SUMMARY_HEADER = [
    "name",
    "r1",
    "r2",
    "V",
    "S",
    "compactness",
    "S_min_fixed_ratios",
    "delta_S_fixed_ratios",
    "verdict_fixed_ratios",
    "S_fixed_height",
    "delta_S_fixed_height",
    "verdict_fixed_height",
]


def _optimum_dict(result: OptimizationResult) -> Dict[str, float]:
    d = result.dims
    return {"L1": d.L1, "L2": d.L2, "B1": d.B1, "B2": d.B2, "H": d.H, "S": result.envelope}


def _exact(report: ComparisonReport) -> Dict[str, object]:
    derived = report.derived
    return {
        "r1": derived.r1,
        "r2": derived.r2,
        "k": derived.k,
        "V": derived.V,
        "S": derived.S,
        "compactness": derived.compactness_vs_fixed_ratios,
        "optimal_fixed_ratios": _optimum_dict(report.optimal_fixed_ratios),
        "optimal_fixed_height": _optimum_dict(report.optimal_fixed_height),
        "delta_S_fixed_ratios": report.delta_S_fixed_ratios,
        "delta_S_fixed_height": report.delta_S_fixed_height,
    }


def _rounded(value):
    if isinstance(value, dict):
        return {key: _rounded(item) for key, item in value.items()}
    return float(round_half_up(value, 2))


def report_to_dict(report: ComparisonReport) -> Dict[str, object]:
    """
    Stable JSON schema of one report

    Keys, in order: name, spec (input schema, parseable by parse_specs),
    exact, display, verdicts, near_optimal_threshold.
    """
    exact = _exact(report)
    return {
        "name": report.spec.name,
        "spec": report.spec.to_dict(),
        "exact": exact,
        "display": _rounded(exact),
        "verdicts": {
            "fixed_ratios": report.verdict_fixed_ratios.value,
            "fixed_height": report.verdict_fixed_height.value,
        },
        "near_optimal_threshold": report.near_optimal_threshold,
    }


def _m(value: float) -> str:
    return f"{fmt_fixed(value, 2)} m"


def _optimum_line(label: str, result: OptimizationResult, area_label: str) -> str:
    d = result.dims
    return (
        f"  Optimum, {label}: L1 = L2 = {_m(d.L1)}, B1 = {_m(d.B1)}, B2 = {_m(d.B2)}, "
        f"H = {_m(d.H)}, {area_label} = {fmt_fixed(result.envelope, 1)} m²"
    )


def report_to_text(report: ComparisonReport) -> str:
    spec = report.spec
    derived = report.derived
    lines = [f"Building: {spec.name}"]
    if spec.source:
        lines.append(f"  Source: {spec.source}")
    lines += [
        f"  Plan: L1 = {_m(spec.L1)}, L2 = {_m(spec.L2)}, B1 = {_m(spec.B1)}, B2 = {_m(spec.B2)}, H = {_m(spec.H)}",
        f"  Ratios: r1 = {fmt_fixed(derived.r1, 2)}, r2 = {fmt_fixed(derived.r2, 2)}, k = {fmt_fixed(derived.k, 2)}",
        f"  V = {fmt_fixed(derived.V, 1)} m³, S = {fmt_fixed(derived.S, 1)} m², "
        f"compactness = {fmt_fixed(derived.compactness_vs_fixed_ratios, 3)}",
        _optimum_line("fixed ratios", report.optimal_fixed_ratios, "S_min"),
        f"  ΔS(fixed ratios) = {fmt_fixed(report.delta_S_fixed_ratios, 1)} m² [{report.verdict_fixed_ratios.value}]",
        _optimum_line("fixed height", report.optimal_fixed_height, "S"),
        f"  ΔS(fixed height) = {fmt_fixed(report.delta_S_fixed_height, 1)} m² [{report.verdict_fixed_height.value}]",
    ]
    return "\n".join(lines) + "\n"


def _csv_row(report: ComparisonReport) -> List[str]:
    derived = report.derived
    return [
        report.spec.name,
        fmt_exact(derived.r1),
        fmt_exact(derived.r2),
        fmt_exact(derived.V),
        fmt_exact(derived.S),
        fmt_exact(derived.compactness_vs_fixed_ratios),
        fmt_exact(report.optimal_fixed_ratios.envelope),
        fmt_exact(report.delta_S_fixed_ratios),
        report.verdict_fixed_ratios.value,
        fmt_exact(report.optimal_fixed_height.envelope),
        fmt_exact(report.delta_S_fixed_height),
        report.verdict_fixed_height.value,
    ]


def _check_format(fmt: str) -> None:
    if fmt not in REPORT_FORMATS:
        raise ValueError(f"unknown report format {fmt!r}; expected one of {', '.join(REPORT_FORMATS)}")


def render_reports(reports: Sequence[ComparisonReport], fmt: str) -> bytes:
    """
    Render a batch: text blocks separated by blank lines, a JSON array,
    or one CSV summary row per building
    """
    _check_format(fmt)
    if fmt == "text":
        return "\n".join(report_to_text(r) for r in reports).encode("utf-8")
    if fmt == "json":
        payload = [report_to_dict(r) for r in reports]
        return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_SUMMARY_HEADER)
    writer.writerows(_csv_row(r) for r in reports)
    return buffer.getvalue().encode("utf-8")


def render_report(report: ComparisonReport, fmt: str) -> bytes:
    """Render one report; JSON is a single object rather than an array"""
    _check_format(fmt)
    if fmt == "json":
        return (json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    return render_reports([report], fmt)
