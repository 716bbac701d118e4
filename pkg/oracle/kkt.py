"""
KKT certification of interval- and box-constrained candidates

The ratio constraints are affine, so for an assumed active set the
multipliers follow from the stationarity equations by linear least
squares. All residuals are made scale-free by multiplying gradient
components and multipliers by x_j / S.
"""
import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, List, NamedTuple, Sequence, Tuple

import numpy as np

from closedform import RatioInterval
from .objectives import asym_envelope_surface, sym_envelope_surface
from .tolerances import Tolerances

logger = logging.getLogger(__name__)

# a constraint counts as active when its bound is this close (relative)
ACTIVE_SET_TOL = 1e-9


@dataclass(frozen=True)
class KktReport:
    """Multipliers and residuals of the four KKT conditions at a candidate"""

    multipliers: Tuple[Tuple[str, float], ...]
    stationarity_residual: float
    primal_violation: float
    dual_violation: float
    slackness_residual: float
    passed: bool
    active_set: Tuple[str, ...] = ()
    diagnostic: str = ""

    def multiplier(self, name: str) -> float:
        for constraint, value in self.multipliers:
            if constraint == name:
                return value
        raise KeyError(name)


class _Bound(NamedTuple):
    name: str
    axis: int
    sign: float  # -1 for a lower bound g = lo - x, +1 for an upper bound g = x - hi
    bound: float

    def g(self, x: np.ndarray) -> float:
        return self.sign * (x[self.axis] - self.bound)

    def gradient(self, n: int) -> np.ndarray:
        grad = np.zeros(n)
        grad[self.axis] = self.sign
        return grad


def _interval_bounds(name: str, axis: int, interval: RatioInterval) -> List[_Bound]:
    return [
        _Bound(f"{name}_lower", axis, -1.0, interval.lo),
        _Bound(f"{name}_upper", axis, 1.0, interval.hi),
    ]


def sym_envelope_gradient(V: float, B: float, r: float) -> np.ndarray:
    """(dS/dB, dS/dr) of 4Vr/(B(2r-1)) + B^2(2r-1)"""
    m = 2.0 * r - 1.0
    return np.array([
        2.0 * B * m - 4.0 * V * r / (B ** 2 * m),
        -4.0 * V / (B * m ** 2) + 2.0 * B ** 2,
    ])


def asym_envelope_gradient(V: float, L1: float, L2: float, r1: float, r2: float) -> np.ndarray:
    """Gradient of k L1 L2 + 2V(L1 + L2)/(L1 L2 k) in (L1, L2, r1, r2)"""
    k = r1 + r2 - r1 * r2
    dS_dk = L1 * L2 - 2.0 * V * (L1 + L2) / (L1 * L2 * k ** 2)
    return np.array([
        k * L2 - 2.0 * V / (L1 ** 2 * k),
        k * L1 - 2.0 * V / (L2 ** 2 * k),
        dS_dk * (1.0 - r2),
        dS_dk * (1.0 - r1),
    ])


def _lagrangian_terms(bounds: Sequence[_Bound], x: np.ndarray, multipliers: Sequence[float]) -> Tuple[float, np.ndarray]:
    value = sum(lam * b.g(x) for lam, b in zip(multipliers, bounds))
    grad = sum((lam * b.gradient(len(x)) for lam, b in zip(multipliers, bounds)), np.zeros(len(x)))
    return value, grad


def sym_lagrangian(V: float, bounds: RatioInterval, x: Sequence[float], multipliers: Sequence[float]) -> float:
    """S(B, r) + l1 (a - r) + l2 (r - b)"""
    x = np.asarray(x, dtype=float)
    value, _ = _lagrangian_terms(_interval_bounds("r", 1, bounds), x, multipliers)
    return float(sym_envelope_surface(x[0], x[1], V)) + value


def sym_lagrangian_gradient(V: float, bounds: RatioInterval, x: Sequence[float], multipliers: Sequence[float]) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    _, grad = _lagrangian_terms(_interval_bounds("r", 1, bounds), x, multipliers)
    return sym_envelope_gradient(V, x[0], x[1]) + grad


def asym_lagrangian(
    V: float, box: Tuple[RatioInterval, RatioInterval], x: Sequence[float], multipliers: Sequence[float]
) -> float:
    """S(L1, L2, r1, r2) + l1 (a1 - r1) + l2 (r1 - b1) + l3 (a2 - r2) + l4 (r2 - b2)"""
    x = np.asarray(x, dtype=float)
    value, _ = _lagrangian_terms(_box_bounds(box), x, multipliers)
    return float(asym_envelope_surface(*x, V)) + value


def asym_lagrangian_gradient(
    V: float, box: Tuple[RatioInterval, RatioInterval], x: Sequence[float], multipliers: Sequence[float]
) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    _, grad = _lagrangian_terms(_box_bounds(box), x, multipliers)
    return asym_envelope_gradient(V, *x) + grad


def _box_bounds(box: Tuple[RatioInterval, RatioInterval]) -> List[_Bound]:
    return _interval_bounds("r1", 2, box[0]) + _interval_bounds("r2", 3, box[1])


def central_difference(f: Callable[[np.ndarray], float], x: Sequence[float], rel_step: float = 1e-6) -> np.ndarray:
    """Central finite-difference gradient with step rel_step * max(1, |x_j|)"""
    x = np.asarray(x, dtype=float)
    grad = np.empty_like(x)
    for j in range(len(x)):
        h = rel_step * max(1.0, abs(x[j]))
        step = np.zeros_like(x)
        step[j] = h
        grad[j] = (f(x + step) - f(x - step)) / (2.0 * h)
    return grad


def _certify(
    x: np.ndarray,
    objective: float,
    gradient: np.ndarray,
    bounds: Sequence[_Bound],
    tolerances: Tolerances,
) -> KktReport:
    n = len(x)
    scale = np.abs(x) / objective
    active = [b for b in bounds if abs(b.g(x)) <= ACTIVE_SET_TOL * max(1.0, abs(b.bound))]

    lambdas = {b.name: 0.0 for b in bounds}
    residual = gradient.copy()
    diagnostic = ""
    singular = False
    if active:
        G = np.column_stack([b.gradient(n) for b in active])
        if np.linalg.matrix_rank(G) < len(active):
            singular = True
            diagnostic = f"singular multiplier system for active set {[b.name for b in active]}"
        else:
            solution, *_ = np.linalg.lstsq(G, -gradient, rcond=None)
            for b, lam in zip(active, solution):
                lambdas[b.name] = float(lam)
            residual = gradient + G @ solution

    primal = max(0.0, max((b.g(x) for b in bounds), default=0.0))
    if np.any(x <= 0):
        primal = math.inf
        diagnostic = diagnostic or "candidate leaves the positive orthant"
    normalized = {b.name: lambdas[b.name] * scale[b.axis] for b in bounds}
    report = KktReport(
        multipliers=tuple((b.name, lambdas[b.name]) for b in bounds),
        stationarity_residual=float(np.max(np.abs(residual * scale))),
        primal_violation=float(primal),
        dual_violation=float(min(0.0, min(normalized.values(), default=0.0))),
        slackness_residual=float(max((abs(normalized[b.name] * b.g(x)) for b in bounds), default=0.0)),
        passed=False,
        active_set=tuple(b.name for b in active),
        diagnostic=diagnostic,
    )
    passed = (
        not singular
        and report.stationarity_residual <= tolerances.stationarity
        and report.primal_violation <= tolerances.primal
        and report.dual_violation >= -tolerances.dual
        and report.slackness_residual <= tolerances.slackness
    )
    if not passed and not diagnostic:
        failing = [
            label
            for label, ok in (
                ("stationarity", report.stationarity_residual <= tolerances.stationarity),
                ("primal feasibility", report.primal_violation <= tolerances.primal),
                ("dual feasibility", report.dual_violation >= -tolerances.dual),
                ("complementary slackness", report.slackness_residual <= tolerances.slackness),
            )
            if not ok
        ]
        diagnostic = "failed: " + ", ".join(failing)
    return replace(report, passed=passed, diagnostic=diagnostic)


def kkt_check_sym(
    V: float,
    bounds: RatioInterval,
    candidate: Tuple[float, float],
    tolerances: Tolerances = Tolerances(),
) -> KktReport:
    """
    Certify a candidate (B, r) for min S(B, r) subject to lo <= r <= hi

    Args:
        V: Volume (m³)
        bounds: Interval for r = L/B
        candidate: (B, r)
        tolerances: Residual thresholds

    Returns:
        KktReport; for the closed-form optimum the lower-bound multiplier
        is positive and the upper one zero
    """
    x = np.asarray(candidate, dtype=float)
    if x.shape != (2,) or x[0] <= 0 or x[1] <= 0.5:
        raise ValueError(f"candidate (B, r) outside the domain B > 0, r > 1/2: {candidate!r}")
    objective = float(sym_envelope_surface(x[0], x[1], V))
    report = _certify(x, objective, sym_envelope_gradient(V, *x), _interval_bounds("r", 1, bounds), tolerances)
    logger.debug(f"KKT sym V={V} at {x.tolist()}: passed={report.passed}, stationarity={report.stationarity_residual:.3g}")
    return report


def kkt_check_asym(
    V: float,
    box: Tuple[RatioInterval, RatioInterval],
    candidate: Tuple[float, float, float, float],
    tolerances: Tolerances = Tolerances(),
) -> KktReport:
    """
    Certify a candidate (L1, L2, r1, r2) for min S subject to the ratio box

    For the closed-form optimum both upper-bound multipliers are positive.
    """
    x = np.asarray(candidate, dtype=float)
    if x.shape != (4,) or np.any(x <= 0):
        raise ValueError(f"candidate (L1, L2, r1, r2) must be four positive numbers: {candidate!r}")
    objective = float(asym_envelope_surface(*x, V))
    report = _certify(x, objective, asym_envelope_gradient(V, *x), _box_bounds(box), tolerances)
    logger.debug(f"KKT asym V={V} at {x.tolist()}: passed={report.passed}, stationarity={report.stationarity_residual:.3g}")
    return report
