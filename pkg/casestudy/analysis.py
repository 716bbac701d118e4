"""
Original-vs-optimal comparison of measured buildings
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List

from closedform import OptimizationResult, asym_min_envelope, optimize_asym_fixed_height, optimize_asym_fixed_ratios
from geometry import AsymRatios, InconsistencyError, asym_envelope, asym_volume, fill_factor
from .specs import BuildingSpec

logger = logging.getLogger(__name__)

DEFAULT_NEAR_OPTIMAL_THRESHOLD = 2.0  # m²
# an optimum may exceed the original envelope by at most this much (m²)
DOMINANCE_TOL = 1e-9


class Verdict(str, Enum):
    IMPROVABLE = "Improvable"
    NEAR_OPTIMAL = "NearOptimal"


@dataclass(frozen=True)
class DerivedParams:
    """Ratios, volume, envelope and compactness of a measured building"""

    ratios: AsymRatios
    V: float
    S: float
    compactness_vs_fixed_ratios: float

    @property
    def r1(self) -> float:
        return self.ratios.r1

    @property
    def r2(self) -> float:
        return self.ratios.r2

    @property
    def k(self) -> float:
        return fill_factor(self.ratios).k


@dataclass(frozen=True)
class ComparisonReport:
    """A building next to its fixed-ratio and fixed-height optima"""

    spec: BuildingSpec
    derived: DerivedParams
    optimal_fixed_ratios: OptimizationResult
    optimal_fixed_height: OptimizationResult
    delta_S_fixed_ratios: float
    delta_S_fixed_height: float
    verdict_fixed_ratios: Verdict
    verdict_fixed_height: Verdict
    near_optimal_threshold: float = DEFAULT_NEAR_OPTIMAL_THRESHOLD


def derive_parameters(spec: BuildingSpec) -> DerivedParams:
    """
    r1 = B1/L1, r2 = B2/L2, V, S and S / S_min for the building's own (V, r1, r2)

    Raises:
        InconsistencyError: If the compactness falls below 1
    """
    dims = spec.dims
    ratios = dims.ratios
    V = asym_volume(dims)
    S = asym_envelope(dims)
    compactness = S / asym_min_envelope(V, fill_factor(ratios).k)
    if compactness < 1.0 - 1e-9:
        raise InconsistencyError(f"{spec.name}: compactness {compactness} is below 1")
    return DerivedParams(ratios=ratios, V=V, S=S, compactness_vs_fixed_ratios=compactness)


def _verdict(delta: float, threshold: float) -> Verdict:
    return Verdict.NEAR_OPTIMAL if delta < threshold else Verdict.IMPROVABLE


def analyze(spec: BuildingSpec, near_optimal_threshold: float = DEFAULT_NEAR_OPTIMAL_THRESHOLD) -> ComparisonReport:
    """
    Compare a building with the optima for its own volume and ratios

    Args:
        spec: Measured building
        near_optimal_threshold: ΔS below this (m²) counts as NearOptimal

    Returns:
        ComparisonReport with both deltas and verdicts

    Raises:
        ValueError: If the threshold is negative or not finite
        InconsistencyError: If an optimum exceeds the original envelope
    """
    if not math.isfinite(near_optimal_threshold) or near_optimal_threshold < 0:
        raise ValueError(f"near-optimal threshold must be a non-negative number, got {near_optimal_threshold!r}")

    derived = derive_parameters(spec)
    fixed_ratios = optimize_asym_fixed_ratios(derived.V, derived.ratios)
    fixed_height = optimize_asym_fixed_height(derived.V, spec.H, derived.ratios)

    delta_ratios = derived.S - fixed_ratios.envelope
    delta_height = derived.S - fixed_height.envelope
    for label, delta in (("fixed ratios", delta_ratios), ("fixed height", delta_height)):
        if delta < -DOMINANCE_TOL:
            raise InconsistencyError(f"{spec.name}: {label} optimum exceeds the original envelope by {-delta} m²")

    report = ComparisonReport(
        spec=spec,
        derived=derived,
        optimal_fixed_ratios=fixed_ratios,
        optimal_fixed_height=fixed_height,
        delta_S_fixed_ratios=delta_ratios,
        delta_S_fixed_height=delta_height,
        verdict_fixed_ratios=_verdict(delta_ratios, near_optimal_threshold),
        verdict_fixed_height=_verdict(delta_height, near_optimal_threshold),
        near_optimal_threshold=near_optimal_threshold,
    )
    logger.debug(
        f"{spec.name}: S={derived.S:.6g}, ΔS fixed ratios={delta_ratios:.6g}, ΔS fixed height={delta_height:.6g}"
    )
    return report


def analyze_batch(
    specs: Iterable[BuildingSpec], near_optimal_threshold: float = DEFAULT_NEAR_OPTIMAL_THRESHOLD
) -> List[ComparisonReport]:
    """Analyze every spec, keeping input order"""
    reports = [analyze(spec, near_optimal_threshold) for spec in specs]
    improvable = sum(
        1 for r in reports if Verdict.IMPROVABLE in (r.verdict_fixed_ratios, r.verdict_fixed_height)
    )
    logger.info(f"✅ Analyzed {len(reports)} building(s), {improvable} improvable")
    return reports
