"""
Envelope grids for the reference surface and contour plots

Each preset evaluates the model surface on a tensor grid and marks the
closed-form minima on it. Grids are pure functions of (figure, overrides).
"""
import csv
import io
import json
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from closedform import (
    RatioInterval,
    asym_min_envelope,
    detect_degenerate_cuboid,
    optimize_asym_fixed_ratios,
    optimize_asym_ratio_box,
    optimize_sym_fixed_ratio,
    optimize_sym_ratio_interval,
)
from geometry import DEGENERACY_TOL, AsymRatios, SymRatio, require_positive
from oracle import asym_envelope_surface, sym_envelope_surface
from utils import fmt_exact, fmt_fixed
from .parser import UsageError

logger = logging.getLogger(__name__)

DEFAULT_POINTS = 51
FIG2_RATIOS = (1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0)


@dataclass(frozen=True)
class Axis:
    name: str
    unit: str
    values: Tuple[float, ...]


@dataclass(frozen=True)
class Marker:
    """Closed-form minimum placed on the grid's axes"""

    label: str
    coordinates: Tuple[float, ...]
    value: float


@dataclass(frozen=True, eq=False)
class SweepGrid:
    """Row-major grid of one quantity over the product of its axes"""

    figure: str
    quantity: str
    axes: Tuple[Axis, ...]
    values: np.ndarray
    minima: Tuple[Marker, ...] = field(default=())

    def __post_init__(self):
        shape = tuple(len(axis.values) for axis in self.axes)
        if self.values.size != int(np.prod(shape)):
            raise ValueError(f"{self.values.size} values do not fill axes of shape {shape}")
        object.__setattr__(self, "values", np.asarray(self.values, dtype=float).reshape(shape))

    def grid_min(self) -> Marker:
        idx = np.unravel_index(np.argmin(self.values), self.values.shape)
        coordinates = tuple(axis.values[i] for axis, i in zip(self.axes, idx))
        return Marker("grid minimum", coordinates, float(self.values[idx]))

    def rows(self) -> List[Tuple[float, ...]]:
        """(axis values..., value) for every grid point, then every marker"""
        mesh = np.meshgrid(*(np.asarray(axis.values) for axis in self.axes), indexing="ij")
        points = np.column_stack([m.ravel() for m in mesh] + [self.values.ravel()])
        rows = [tuple(float(v) for v in point) for point in points]
        rows += [m.coordinates + (m.value,) for m in self.minima]
        return rows

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow([axis.name for axis in self.axes] + ["value"])
        writer.writerows([fmt_exact(v) for v in row] for row in self.rows())
        return buffer.getvalue()

    def to_dict(self) -> dict:
        return {
            "figure": self.figure,
            "quantity": self.quantity,
            "axes": [{"name": a.name, "unit": a.unit, "values": list(a.values)} for a in self.axes],
            "values": [float(v) for v in self.values.ravel()],
            "minima": [{"label": m.label, "coordinates": list(m.coordinates), "value": m.value} for m in self.minima],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        def where(marker: Marker) -> str:
            return ", ".join(f"{a.name} = {fmt_fixed(c, 2)}" for a, c in zip(self.axes, marker.coordinates))

        extent = " x ".join(f"{a.name} [{a.values[0]:g}, {a.values[-1]:g}] ({len(a.values)})" for a in self.axes)
        best = self.grid_min()
        lines = [
            f"Figure {self.figure}: {self.quantity} over {extent}",
            f"Grid minimum: {fmt_fixed(best.value, 2)} at {where(best)}",
        ]
        lines += [f"Closed-form minimum ({m.label}): {fmt_fixed(m.value, 2)} at {where(m)}" for m in self.minima]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SweepOverrides:
    volume: Optional[float] = None
    ratio_values: Optional[Sequence[float]] = None
    ratio_range: Optional[Sequence[float]] = None
    ratios: Optional[Sequence[float]] = None
    ratio_ranges: Optional[Sequence[float]] = None
    x_range: Optional[Sequence[float]] = None
    y_range: Optional[Sequence[float]] = None
    points: Optional[int] = None

    def reject(self, figure: str, *names: str) -> None:
        for name in names:
            if getattr(self, name) is not None:
                flag = "--" + name.replace("_", "-")
                raise UsageError(f"{flag} does not apply to {figure}")


def _length_range(values: Optional[Sequence[float]], default: Tuple[float, float], flag: str) -> Tuple[float, float]:
    lo, hi = default if values is None else values
    if not 0 < lo < hi:
        raise UsageError(f"{flag} needs 0 < LO < HI, got {lo},{hi}")
    return float(lo), float(hi)


def _linspace(bounds: Tuple[float, float], points: int) -> Tuple[float, ...]:
    if points < 2:
        raise UsageError(f"--points must be at least 2 for a range, got {points}")
    return tuple(float(v) for v in np.linspace(bounds[0], bounds[1], points))


def _sym_ratio_marker(V: float, r: float) -> Marker:
    if abs(r - 1.0) <= DEGENERACY_TOL:
        result = detect_degenerate_cuboid(V)
    else:
        result = optimize_sym_fixed_ratio(V, SymRatio(r))
    return Marker(f"r = {r:g}", (result.dims.B, r), result.envelope)


def fig2_grid(o: SweepOverrides) -> SweepGrid:
    """Envelope over width B for a set of ratios r, with the optimum per r"""
    o.reject("fig2", "ratio_range", "ratios", "ratio_ranges", "y_range")
    V = require_positive("V", 300.0 if o.volume is None else o.volume)
    ratios = tuple(float(r) for r in (FIG2_RATIOS if o.ratio_values is None else o.ratio_values))
    for r in ratios:
        if abs(r - 1.0) > DEGENERACY_TOL:
            SymRatio(r)
    B = _linspace(_length_range(o.x_range, (2.0, 12.0), "--x-range"), o.points or DEFAULT_POINTS)
    values = sym_envelope_surface(np.asarray(B)[:, None], np.asarray(ratios)[None, :], V)
    return SweepGrid(
        figure="fig2",
        quantity="envelope (m²)",
        axes=(Axis("B", "m", B), Axis("r", "1", ratios)),
        values=values,
        minima=tuple(_sym_ratio_marker(V, r) for r in ratios),
    )


def fig3_grid(o: SweepOverrides) -> SweepGrid:
    """Envelope over (B, r) with r in an interval; the optimum sits on its lower end"""
    o.reject("fig3", "ratio_values", "ratios", "ratio_ranges", "y_range")
    V = require_positive("V", 200.0 if o.volume is None else o.volume)
    bounds = RatioInterval(*(o.ratio_range or (3.0, 4.0))).require_symmetric("r")
    points = o.points or DEFAULT_POINTS
    B = _linspace(_length_range(o.x_range, (1.0, 10.0), "--x-range"), points)
    r = _linspace((bounds.lo, bounds.hi), points)
    result = optimize_sym_ratio_interval(V, bounds)
    return SweepGrid(
        figure="fig3",
        quantity="envelope (m²)",
        axes=(Axis("B", "m", B), Axis("r", "1", r)),
        values=sym_envelope_surface(np.asarray(B)[:, None], np.asarray(r)[None, :], V),
        minima=(Marker("interval optimum", (result.dims.B, bounds.lo), result.envelope),),
    )


def fig5_grid(o: SweepOverrides) -> SweepGrid:
    """Envelope over (L1, L2) for fixed r1, r2"""
    o.reject("fig5", "ratio_values", "ratio_range", "ratio_ranges")
    V = require_positive("V", 300.0 if o.volume is None else o.volume)
    ratios = AsymRatios(*(o.ratios or (0.4, 0.6)))
    points = o.points or DEFAULT_POINTS
    L1 = _linspace(_length_range(o.x_range, (4.0, 25.0), "--x-range"), points)
    L2 = _linspace(_length_range(o.y_range, (4.0, 25.0), "--y-range"), points)
    result = optimize_asym_fixed_ratios(V, ratios)
    values = asym_envelope_surface(np.asarray(L1)[:, None], np.asarray(L2)[None, :], ratios.r1, ratios.r2, V)
    return SweepGrid(
        figure="fig5",
        quantity="envelope (m²)",
        axes=(Axis("L1", "m", L1), Axis("L2", "m", L2)),
        values=values,
        minima=(Marker("fixed-ratio optimum", (result.dims.L1, result.dims.L2), result.envelope),),
    )


def fig6_grid(o: SweepOverrides) -> SweepGrid:
    """Minimal envelope for every (r1, r2) in a box; the optimum is the upper corner"""
    o.reject("fig6", "ratio_values", "ratio_range", "ratios", "x_range", "y_range")
    V = require_positive("V", 200.0 if o.volume is None else o.volume)
    a1, b1, a2, b2 = o.ratio_ranges or (0.3, 0.5, 0.2, 0.8)
    box1 = RatioInterval(a1, b1).require_asymmetric("r1")
    box2 = RatioInterval(a2, b2).require_asymmetric("r2")
    points = o.points or DEFAULT_POINTS
    r1 = _linspace((box1.lo, box1.hi), points)
    r2 = _linspace((box2.lo, box2.hi), points)
    R1, R2 = np.asarray(r1)[:, None], np.asarray(r2)[None, :]
    result = optimize_asym_ratio_box(V, box1, box2)
    return SweepGrid(
        figure="fig6",
        quantity="minimal envelope (m²)",
        axes=(Axis("r1", "1", r1), Axis("r2", "1", r2)),
        values=asym_min_envelope(V, R1 + R2 - R1 * R2),
        minima=(Marker("box optimum", (box1.hi, box2.hi), result.envelope),),
    )


PRESETS = {"fig2": fig2_grid, "fig3": fig3_grid, "fig5": fig5_grid, "fig6": fig6_grid}


def build_sweep(figure: str, overrides: SweepOverrides = SweepOverrides()) -> SweepGrid:
    """
    Grid for one preset, with optional parameter overrides

    Raises:
        UsageError: On an unknown figure, inapplicable override or bad range
        GeometryError: On ratios or volumes outside the model's domain
    """
    if figure not in PRESETS:
        raise UsageError(f"unknown figure {figure!r}; expected one of {', '.join(PRESETS)}")
    grid = PRESETS[figure](overrides)
    logger.debug(f"sweep {figure}: {grid.values.shape} grid, {len(grid.minima)} marker(s)")
    return grid
