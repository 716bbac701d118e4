"""
Closed form vs numerical optimum, scenario by scenario

One-dimensional scenarios are searched with golden-section, the symmetric
interval scenario with golden-section over r on the best-width profile, and
the asymmetric ones with grid refinement. Interval and box scenarios also
get a KKT report.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from closedform import BaseScenario, OptimizationResult, ScenarioTag
from .kkt import KktReport, kkt_check_asym, kkt_check_sym
from .minimizers import ScalarObjective, bracketed_golden_min, golden_section_min, grid_refine_min
from .objectives import (
    asym_envelope_surface,
    asym_fixed_height_surface,
    sym_envelope_surface,
    sym_fixed_floor_surface,
)
from .tolerances import Tolerances

logger = logging.getLogger(__name__)

# length search box, in multiples of V^(1/3)
LENGTH_BOX = (0.05, 10.0)
GRID_LEVELS = 20
BOX_GRID_LEVELS = 22
BOX_POINTS_PER_AXIS = 13


@dataclass(frozen=True)
class OracleComparison:
    """Agreement between a closed-form optimum and an independent search"""

    closed_form: OptimizationResult
    coordinate_names: Tuple[str, ...]
    closed_form_point: Tuple[float, ...]
    numerical_point: Tuple[float, ...]
    numerical_value: float
    rel_error_point: float
    rel_error_objective: float
    agrees: bool
    kkt: Optional[KktReport] = None

    @property
    def passed(self) -> bool:
        return self.agrees and (self.kkt is None or self.kkt.passed)


def _length_axis(V: float) -> Tuple[float, float]:
    scale = V ** (1.0 / 3.0)
    return (LENGTH_BOX[0] * scale, LENGTH_BOX[1] * scale)


def _positive_objective(fn, name: str) -> ScalarObjective:
    return ScalarObjective(fn, domain=(0.0, math.inf), name=name)


def numerical_optimum(scenario: BaseScenario) -> Tuple[Tuple[float, ...], float]:
    """
    Minimize the scenario's envelope without using its closed form

    Args:
        scenario: Any of the five constraint scenarios

    Returns:
        (point ordered like scenario.coordinate_names, minimal envelope)
    """
    V = scenario.V
    tag = scenario.tag

    if tag is ScenarioTag.SYM_FIXED_RATIO:
        r = scenario.r.r
        objective = _positive_objective(lambda B: sym_envelope_surface(B, r, V), "S(B)")
        B, value = bracketed_golden_min(objective, seed=V ** (1.0 / 3.0))
        return (B,), value

    if tag is ScenarioTag.ASYM_FIXED_HEIGHT:
        r1, r2, H = scenario.ratios.r1, scenario.ratios.r2, scenario.H
        k = r1 + r2 - r1 * r2
        objective = _positive_objective(lambda L1: asym_fixed_height_surface(L1, V, H, k), "S(L1)")
        L1, value = bracketed_golden_min(objective, seed=math.sqrt(V / H))
        return (L1,), value

    if tag is ScenarioTag.SYM_RATIO_INTERVAL:
        # S is nearly flat in r close to 1, so a joint (B, r) grid can drop r = lo
        # on its first level; search r on the profile min_B S(B, r) instead
        bounds = scenario.bounds
        seed = V ** (1.0 / 3.0)

        def best_width(r: float) -> Tuple[float, float]:
            objective = _positive_objective(lambda B: sym_envelope_surface(B, r, V), "S(B)")
            return bracketed_golden_min(objective, seed=seed)

        profile = ScalarObjective(
            lambda r: best_width(r)[1], domain=(bounds.lo, bounds.hi), name="min over B of S(B, r)"
        )
        r, value = golden_section_min(profile, bounds.lo, bounds.hi)
        B, _ = best_width(r)
        return (B, r), value

    if tag is ScenarioTag.ASYM_FIXED_RATIOS:
        r1, r2 = scenario.ratios.r1, scenario.ratios.r2
        x, value = grid_refine_min(
            lambda L1, L2: asym_envelope_surface(L1, L2, r1, r2, V),
            [_length_axis(V), _length_axis(V)],
            levels=GRID_LEVELS,
        )
        return tuple(float(v) for v in x), value

    if tag is ScenarioTag.ASYM_RATIO_BOX:
        b1, b2 = scenario.b1_range, scenario.b2_range
        x, value = grid_refine_min(
            lambda L1, L2, r1, r2: asym_envelope_surface(L1, L2, r1, r2, V),
            [_length_axis(V), _length_axis(V), (b1.lo, b1.hi), (b2.lo, b2.hi)],
            levels=BOX_GRID_LEVELS,
            points_per_axis=BOX_POINTS_PER_AXIS,
        )
        return tuple(float(v) for v in x), value

    raise ValueError(f"no numerical method for scenario {tag.value}")


def verify_scenario(
    scenario: BaseScenario,
    tolerances: Tolerances = Tolerances(),
    perturbation: float = 0.0,
) -> OracleComparison:
    """
    Compare the closed-form optimum of a scenario with a numerical search

    Args:
        scenario: Scenario to verify
        tolerances: Agreement and KKT thresholds
        perturbation: Relative error injected into the closed-form envelope
            before comparing (negative control for the check command)

    Returns:
        OracleComparison, with a KKT report for interval and box scenarios
    """
    result = scenario.solve()
    expected_point = scenario.free_coordinates(result)
    expected_value = result.envelope * (1.0 + perturbation)
    point, value = numerical_optimum(scenario)

    rel_point = max(abs(p - q) / abs(q) for p, q in zip(point, expected_point))
    rel_objective = abs(value - expected_value) / abs(expected_value)
    agrees = rel_point <= tolerances.point and rel_objective <= tolerances.objective

    kkt = None
    if scenario.tag is ScenarioTag.SYM_RATIO_INTERVAL:
        kkt = kkt_check_sym(scenario.V, scenario.bounds, expected_point, tolerances)
    elif scenario.tag is ScenarioTag.ASYM_RATIO_BOX:
        kkt = kkt_check_asym(scenario.V, (scenario.b1_range, scenario.b2_range), expected_point, tolerances)

    comparison = OracleComparison(
        closed_form=result,
        coordinate_names=scenario.coordinate_names,
        closed_form_point=tuple(expected_point),
        numerical_point=tuple(point),
        numerical_value=value,
        rel_error_point=rel_point,
        rel_error_objective=rel_objective,
        agrees=agrees,
        kkt=kkt,
    )
    if not comparison.passed:
        logger.warning(
            f"❌ {scenario!r}: point error {rel_point:.3g}, objective error {rel_objective:.3g}"
            + (f", KKT {kkt.diagnostic}" if kkt is not None and not kkt.passed else "")
        )
    return comparison


def degeneracy_search_sym(V: float, r_max: float = 10.0, levels: int = GRID_LEVELS) -> Tuple[np.ndarray, float]:
    """
    Grid search over (B, r) with r only bounded below by 1

    The incumbent runs into r = 1: with V fixed the best symmetric plan
    is a cuboid.
    """
    return grid_refine_min(
        lambda B, r: sym_envelope_surface(B, r, V), [_length_axis(V), (1.0, r_max)], levels=levels
    )


def degeneracy_search_asym(V: float, r_min: float = 0.05, levels: int = BOX_GRID_LEVELS) -> Tuple[np.ndarray, float]:
    """
    Grid search over (L1, L2, r1, r2) with r1, r2 in [r_min, 1]

    The incumbent reaches fill factor 1 (a wing as wide as it is long),
    i.e. the plan fills its bounding rectangle and becomes a cuboid.
    """
    return grid_refine_min(
        lambda L1, L2, r1, r2: asym_envelope_surface(L1, L2, r1, r2, V),
        [_length_axis(V), _length_axis(V), (r_min, 1.0), (r_min, 1.0)],
        levels=levels,
        points_per_axis=BOX_POINTS_PER_AXIS,
    )


def degeneracy_search_sym_fixed_floor(F: float, H: float, r_max: float = 10.0) -> Tuple[float, float]:
    """
    Golden-section over r in [1, r_max] with floor area and height fixed

    The envelope grows with r, so the search ends at r = 1 (L = B).
    """
    objective = ScalarObjective(lambda r: sym_fixed_floor_surface(r, F, H), domain=(1.0, math.inf), name="S(r)")
    return golden_section_min(objective, 1.0, r_max)
