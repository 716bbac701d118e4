"""
Derivative-free minimizers used to check the closed forms independently
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2

GRID_SHRINK = 3.0
GRID_POINTS_PER_AXIS = 33
MAX_GOLDEN_ITERATIONS = 500
MAX_BRACKET_DOUBLINGS = 200


class EvaluationError(ArithmeticError):
    """Objective returned a non-finite value"""

    def __init__(self, point, value):
        super().__init__(f"objective is not finite at {point!r}: {value!r}")
        self.point = point
        self.value = value


@dataclass(frozen=True)
class ScalarObjective:
    """A real function of one variable with its valid domain [lo, hi]"""

    fn: Callable[[float], float]
    domain: Tuple[float, float] = (-math.inf, math.inf)
    name: str = "f"

    def __call__(self, x: float) -> float:
        value = float(self.fn(x))
        if not math.isfinite(value):
            raise EvaluationError(x, value)
        return value

    def covers(self, lo: float, hi: float) -> bool:
        return self.domain[0] <= lo and hi <= self.domain[1]


def _as_objective(f) -> ScalarObjective:
    return f if isinstance(f, ScalarObjective) else ScalarObjective(f)


def golden_section_min(f, lo: float, hi: float, tol: float = 1e-10) -> Tuple[float, float]:
    """
    Golden-section search for the minimum of a unimodal function

    Args:
        f: ScalarObjective or plain callable, unimodal on [lo, hi]
        lo: Left end of the bracket
        hi: Right end of the bracket
        tol: Stop once the bracket is narrower than tol * max(1, |x|). Near a
            smooth minimum f is flat to rounding, so the returned argmin is
            only accurate to about sqrt(machine epsilon) * max(1, |x|)

    Returns:
        (argmin, min value)

    Raises:
        ValueError: If lo >= hi or the bracket leaves f's domain
        EvaluationError: If f is not finite somewhere it is evaluated
    """
    objective = _as_objective(f)
    if not lo < hi:
        raise ValueError(f"bracket needs lo < hi, got [{lo}, {hi}]")
    if not objective.covers(lo, hi):
        raise ValueError(f"bracket [{lo}, {hi}] leaves the domain {objective.domain} of {objective.name}")

    a, h = lo, hi - lo
    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = objective(c)
    yd = objective(d)

    for _ in range(MAX_GOLDEN_ITERATIONS):
        if h <= tol * max(1.0, abs(c)):
            break
        if yc < yd:
            d = c
            yd = yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = objective(c)
        else:
            a = c
            c = d
            yc = yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = objective(d)

    if yc < yd:
        return c, yc
    return d, yd


def expand_upper_bracket(f, seed: float) -> float:
    """
    Double an upper bound from seed until f exceeds twice f(seed)

    For a convex objective this guarantees the minimizer lies below the
    returned bound.
    """
    objective = _as_objective(f)
    threshold = 2.0 * objective(seed)
    upper = 2.0 * seed
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if objective(upper) > threshold:
            return upper
        upper *= 2.0
    raise EvaluationError(upper, "no bracket found")


def bracketed_golden_min(f, seed: float, tol: float = 1e-10) -> Tuple[float, float]:
    """
    Golden-section search on (max(1e-3, 1e-3 * seed), upper] for a positive variable

    The lower end stays away from the pole at 0; the upper end comes from
    expand_upper_bracket.
    """
    lower = max(1e-3, 1e-3 * seed)
    upper = expand_upper_bracket(f, seed)
    logger.debug(f"golden-section bracket [{lower}, {upper}] from seed {seed}")
    return golden_section_min(f, lower, upper, tol)


def grid_refine_min(
    f: Callable[..., np.ndarray],
    box: Sequence[Tuple[float, float]],
    levels: int = 8,
    points_per_axis: int = GRID_POINTS_PER_AXIS,
) -> Tuple[np.ndarray, float]:
    """
    Brute-force minimization by repeated grid evaluation and box shrinking

    Each level evaluates a full tensor grid over the current box, then
    shrinks every axis by a factor 3 around the incumbent (shifted to stay
    inside the box). Accuracy is about box width * 3^-levels.

    Args:
        f: Objective taking one broadcastable array per axis
        box: (lo, hi) per axis
        levels: Number of refinement rounds
        points_per_axis: Grid points per axis and level

    Returns:
        (argmin vector, min value)

    Raises:
        ValueError: On an empty box or bad counts
        EvaluationError: If f is not finite somewhere on a grid
    """
    if not box:
        raise ValueError("box must have at least one axis")
    if levels < 1 or points_per_axis < 2:
        raise ValueError("need levels >= 1 and points_per_axis >= 2")
    lo = np.array([float(b[0]) for b in box])
    hi = np.array([float(b[1]) for b in box])
    if np.any(lo > hi):
        raise ValueError(f"empty box {list(box)}")

    best_x = None
    best_value = math.inf
    for _ in range(levels):
        axes = [np.linspace(a, b, points_per_axis) for a, b in zip(lo, hi)]
        grid = np.meshgrid(*axes, indexing="ij", sparse=True)
        values = np.broadcast_to(np.asarray(f(*grid), dtype=float), tuple(len(a) for a in axes))

        finite = np.isfinite(values)
        if not finite.all():
            idx = np.unravel_index(np.argmin(finite), values.shape)
            raise EvaluationError(tuple(float(a[i]) for a, i in zip(axes, idx)), float(values[idx]))

        idx = np.unravel_index(np.argmin(values), values.shape)
        if values[idx] < best_value:
            best_value = float(values[idx])
            best_x = np.array([a[i] for a, i in zip(axes, idx)])

        width = (hi - lo) / GRID_SHRINK
        new_lo = np.clip(best_x - width / 2.0, lo, hi - width)
        lo, hi = new_lo, new_lo + width

    logger.debug(f"grid refine: {levels} levels -> {best_x.tolist()} (value {best_value})")
    return best_x, best_value
