"""
Closed-form envelope minimizers for every constraint scenario

Each optimizer is a power law in V. Interval and box variants select the
active bound and hand over to the fixed-ratio formula, recording which
bound fired in `active_constraints`.
"""
import logging
import math
from typing import Tuple

from geometry import (
    AsymDims,
    AsymRatios,
    DegeneracyError,
    SymDims,
    SymRatio,
    fill_factor,
    require_positive,
)
from .results import ActiveConstraint, BoundSide, OptimizationResult, RatioInterval, ScenarioTag

logger = logging.getLogger(__name__)


def _cbrt(x: float) -> float:
    # operands are positive by precondition
    return x ** (1.0 / 3.0)


def sym_min_envelope(V: float, r: float) -> float:
    """S_min = 3 (4 V^2 r^2 / (2r - 1))^(1/3) for a symmetric plan, r >= 1"""
    return 3.0 * _cbrt(4.0 * V ** 2 * r ** 2 / (2.0 * r - 1.0))


def asym_min_envelope(V: float, k: float) -> float:
    """S_min = 3 (4 V^2 / k)^(1/3) for an asymmetric plan with fill factor k"""
    return 3.0 * _cbrt(4.0 * V ** 2 / k)


def _sym_optimum(
    V: float, r: float, scenario: ScenarioTag, active: Tuple[ActiveConstraint, ...]
) -> OptimizationResult:
    m = 2.0 * r - 1.0
    B = _cbrt(2.0 * V * r / m ** 2)
    H = _cbrt(m * V) / (2.0 * r) ** (2.0 / 3.0)
    result = OptimizationResult(
        scenario=scenario,
        dims=SymDims(r * B, B, H),
        envelope=sym_min_envelope(V, r),
        input_volume=V,
        active_constraints=active,
    )
    logger.debug(f"{scenario.value}: V={V}, r={r} -> B={B}, H={H}, S={result.envelope}")
    return result.verify()


def _asym_optimum(
    V: float, ratios: AsymRatios, scenario: ScenarioTag, active: Tuple[ActiveConstraint, ...]
) -> OptimizationResult:
    k = fill_factor(ratios).k
    L = _cbrt(2.0 * V / k ** 2)
    H = _cbrt(k * V / 4.0)
    result = OptimizationResult(
        scenario=scenario,
        dims=AsymDims(L, L, ratios.r1 * L, ratios.r2 * L, H),
        envelope=asym_min_envelope(V, k),
        input_volume=V,
        active_constraints=active,
    )
    logger.debug(f"{scenario.value}: V={V}, k={k} -> L1=L2={L}, H={H}, S={result.envelope}")
    return result.verify()


def _proper_sym_ratio(r: SymRatio) -> SymRatio:
    if not isinstance(r, SymRatio):
        raise TypeError(f"r must be a SymRatio, got {type(r).__name__}")
    if r.is_degenerate:
        raise DegeneracyError("the fixed-ratio optimum needs r > 1", field="r")
    return r


def _proper_asym_ratios(r: AsymRatios) -> AsymRatios:
    if not isinstance(r, AsymRatios):
        raise TypeError(f"r must be an AsymRatios, got {type(r).__name__}")
    if r.is_degenerate:
        raise DegeneracyError("the fixed-ratio optimum needs 0 < r1, r2 < 1", field="r")
    return r


def optimize_sym_fixed_ratio(V: float, r: SymRatio) -> OptimizationResult:
    """
    Minimal-envelope symmetric plan for a prescribed volume and ratio

    Args:
        V: Volume (m³)
        r: Wing aspect ratio L/B, strictly above 1

    Returns:
        B = (2Vr/(2r-1)^2)^(1/3), L = rB, H = ((2r-1)V)^(1/3)/(2r)^(2/3),
        S = 3(4V^2 r^2/(2r-1))^(1/3)
    """
    V = require_positive("V", V)
    r = _proper_sym_ratio(r)
    return _sym_optimum(V, r.r, ScenarioTag.SYM_FIXED_RATIO, ())


def optimize_sym_ratio_interval(V: float, bounds: RatioInterval) -> OptimizationResult:
    """
    Minimal-envelope symmetric plan with r free in [lo, hi]

    S_min(r) increases for r > 1, so the lower bound is always active.
    """
    V = require_positive("V", V)
    bounds.require_symmetric("r")
    return _sym_optimum(
        V, bounds.lo, ScenarioTag.SYM_RATIO_INTERVAL, (ActiveConstraint("r", BoundSide.LOWER),)
    )


def optimize_asym_fixed_ratios(V: float, r: AsymRatios) -> OptimizationResult:
    """
    Minimal-envelope asymmetric plan for prescribed volume and ratios

    Both wings come out with the same length:
    L1 = L2 = (2V/k^2)^(1/3), H = (kV/4)^(1/3), S = 3(4V^2/k)^(1/3).
    """
    V = require_positive("V", V)
    r = _proper_asym_ratios(r)
    return _asym_optimum(V, r, ScenarioTag.ASYM_FIXED_RATIOS, ())


def optimize_asym_ratio_box(
    V: float, b1_range: RatioInterval, b2_range: RatioInterval
) -> OptimizationResult:
    """
    Minimal-envelope asymmetric plan with r1, r2 free in a box

    S decreases in k and k increases in both ratios, so both upper bounds
    are active.
    """
    V = require_positive("V", V)
    b1_range.require_asymmetric("r1")
    b2_range.require_asymmetric("r2")
    active = (ActiveConstraint("r1", BoundSide.UPPER), ActiveConstraint("r2", BoundSide.UPPER))
    return _asym_optimum(
        V, AsymRatios(b1_range.hi, b2_range.hi), ScenarioTag.ASYM_RATIO_BOX, active
    )


def optimize_asym_fixed_height(V: float, H: float, r: AsymRatios) -> OptimizationResult:
    """
    Minimal-envelope asymmetric plan when the height is prescribed too

    Args:
        V: Volume (m³)
        H: Height (m)
        r: Wing aspect ratios

    Returns:
        L1 = L2 = sqrt(V/(H k)), S = V/H + 4H sqrt(V/(H k))
    """
    V = require_positive("V", V)
    H = require_positive("H", H)
    r = _proper_asym_ratios(r)
    k = fill_factor(r).k
    L = math.sqrt(V / (H * k))
    result = OptimizationResult(
        scenario=ScenarioTag.ASYM_FIXED_HEIGHT,
        dims=AsymDims(L, L, r.r1 * L, r.r2 * L, H),
        envelope=V / H + 4.0 * H * L,
        input_volume=V,
    )
    logger.debug(f"AsymFixedHeight: V={V}, H={H}, k={k} -> L1=L2={L}, S={result.envelope}")
    return result.verify()


def detect_degenerate_cuboid(V: float) -> OptimizationResult:
    """
    Unconstrained minimum for a fixed volume: the plan collapses to a cuboid

    With only V prescribed, the envelope is smallest at L = B (symmetric)
    or L1 = L2 = B1 = B2 (asymmetric); both give L = B = (2V)^(1/3),
    H = (V/4)^(1/3) and S = 3(2V)^(2/3), i.e. S_min at r = 1.
    """
    V = require_positive("V", V)
    side = _cbrt(2.0 * V)
    H = _cbrt(V / 4.0)
    result = OptimizationResult(
        scenario=ScenarioTag.DEGENERATE_CUBOID,
        dims=SymDims.cuboid(side, H),
        envelope=3.0 * (2.0 * V) ** (2.0 / 3.0),
        input_volume=V,
        degenerate=True,
    )
    logger.warning(f"⚠️  V={V}: minimal envelope is a cuboid {side:.4g} x {side:.4g} x {H:.4g}, the L-form is lost")
    return result.verify()
