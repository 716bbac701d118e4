"""
Scenario objects
Bundle the inputs of one constraint scenario with the closed form that solves it
"""

import logging
from abc import ABC, abstractmethod
from typing import Dict, Tuple, Type

import numpy as np

from geometry import AsymRatios, SymRatio, require_positive
from .optimizers import (
    optimize_asym_fixed_height,
    optimize_asym_fixed_ratios,
    optimize_asym_ratio_box,
    optimize_sym_fixed_ratio,
    optimize_sym_ratio_interval,
)
from .results import OptimizationResult, RatioInterval, ScenarioTag


class BaseScenario(ABC):
    """Abstract base class for constraint scenarios"""

    tag: ScenarioTag
    # names of the coordinates an independent search has to optimize over
    coordinate_names: Tuple[str, ...]

    def __init__(self, V: float):
        """
        Args:
            V: Prescribed volume (m³)
        """
        self.V = require_positive("V", V)
        self.logger = logging.getLogger(f"Scenario.{self.tag.value}")

    @abstractmethod
    def solve(self) -> OptimizationResult:
        """Closed-form optimum of this scenario"""

    @abstractmethod
    def free_coordinates(self, result: OptimizationResult) -> Tuple[float, ...]:
        """
        Extract the searched coordinates from a result

        Args:
            result: Result returned by solve()

        Returns:
            Values ordered like coordinate_names
        """

    @abstractmethod
    def describe(self) -> str:
        """One-line summary of the inputs"""

    @classmethod
    @abstractmethod
    def worked_example(cls) -> "BaseScenario":
        """The worked example for this scenario"""

    @classmethod
    @abstractmethod
    def sample(cls, rng: np.random.Generator) -> "BaseScenario":
        """Random valid instance drawn from rng"""

    def get_name(self) -> str:
        return self.tag.value

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()})"


def _sample_volume(rng: np.random.Generator) -> float:
    return float(rng.uniform(10.0, 5000.0))


def _sample_asym_ratio(rng: np.random.Generator) -> float:
    return float(rng.uniform(0.05, 0.95))


def _sample_asym_interval(rng: np.random.Generator) -> RatioInterval:
    lo = float(rng.uniform(0.05, 0.85))
    return RatioInterval(lo, float(rng.uniform(lo + 0.02, 0.95)))


class SymFixedRatioScenario(BaseScenario):
    """Symmetric plan, V and r = L/B prescribed"""

    tag = ScenarioTag.SYM_FIXED_RATIO
    coordinate_names = ("B",)

    def __init__(self, V: float, r: SymRatio):
        super().__init__(V)
        self.r = r

    def solve(self) -> OptimizationResult:
        return optimize_sym_fixed_ratio(self.V, self.r)

    def free_coordinates(self, result: OptimizationResult) -> Tuple[float, ...]:
        return (result.dims.B,)

    def describe(self) -> str:
        return f"V={self.V:g}, r={self.r.r:g}"

    @classmethod
    def worked_example(cls) -> "SymFixedRatioScenario":
        return cls(300.0, SymRatio(2.0))

    @classmethod
    def sample(cls, rng: np.random.Generator) -> "SymFixedRatioScenario":
        V = _sample_volume(rng)
        return cls(V, SymRatio(float(rng.uniform(1.01, 10.0))))


class SymRatioIntervalScenario(BaseScenario):
    """Symmetric plan, V prescribed and r = L/B in [lo, hi]"""

    tag = ScenarioTag.SYM_RATIO_INTERVAL
    coordinate_names = ("B", "r")

    def __init__(self, V: float, bounds: RatioInterval):
        super().__init__(V)
        self.bounds = bounds.require_symmetric("r")

    def solve(self) -> OptimizationResult:
        return optimize_sym_ratio_interval(self.V, self.bounds)

    def free_coordinates(self, result: OptimizationResult) -> Tuple[float, ...]:
        d = result.dims
        return (d.B, d.L / d.B)

    def describe(self) -> str:
        return f"V={self.V:g}, r in [{self.bounds.lo:g}, {self.bounds.hi:g}]"

    @classmethod
    def worked_example(cls) -> "SymRatioIntervalScenario":
        return cls(200.0, RatioInterval(3.0, 4.0))

    @classmethod
    def sample(cls, rng: np.random.Generator) -> "SymRatioIntervalScenario":
        V = _sample_volume(rng)
        lo = float(rng.uniform(1.01, 8.0))
        return cls(V, RatioInterval(lo, lo + float(rng.uniform(0.1, 2.0))))


class AsymFixedRatiosScenario(BaseScenario):
    """Asymmetric plan, V, r1 and r2 prescribed"""

    tag = ScenarioTag.ASYM_FIXED_RATIOS
    coordinate_names = ("L1", "L2")

    def __init__(self, V: float, ratios: AsymRatios):
        super().__init__(V)
        self.ratios = ratios

    def solve(self) -> OptimizationResult:
        return optimize_asym_fixed_ratios(self.V, self.ratios)

    def free_coordinates(self, result: OptimizationResult) -> Tuple[float, ...]:
        return (result.dims.L1, result.dims.L2)

    def describe(self) -> str:
        return f"V={self.V:g}, r1={self.ratios.r1:g}, r2={self.ratios.r2:g}"

    @classmethod
    def worked_example(cls) -> "AsymFixedRatiosScenario":
        return cls(300.0, AsymRatios(0.4, 0.6))

    @classmethod
    def sample(cls, rng: np.random.Generator) -> "AsymFixedRatiosScenario":
        V = _sample_volume(rng)
        return cls(V, AsymRatios(_sample_asym_ratio(rng), _sample_asym_ratio(rng)))


class AsymRatioBoxScenario(BaseScenario):
    """Asymmetric plan, V prescribed, r1 and r2 each in an interval"""

    tag = ScenarioTag.ASYM_RATIO_BOX
    coordinate_names = ("L1", "L2", "r1", "r2")

    def __init__(self, V: float, b1_range: RatioInterval, b2_range: RatioInterval):
        super().__init__(V)
        self.b1_range = b1_range.require_asymmetric("r1")
        self.b2_range = b2_range.require_asymmetric("r2")

    def solve(self) -> OptimizationResult:
        return optimize_asym_ratio_box(self.V, self.b1_range, self.b2_range)

    def free_coordinates(self, result: OptimizationResult) -> Tuple[float, ...]:
        d = result.dims
        return (d.L1, d.L2, d.B1 / d.L1, d.B2 / d.L2)

    def describe(self) -> str:
        return (
            f"V={self.V:g}, r1 in [{self.b1_range.lo:g}, {self.b1_range.hi:g}], "
            f"r2 in [{self.b2_range.lo:g}, {self.b2_range.hi:g}]"
        )

    @classmethod
    def worked_example(cls) -> "AsymRatioBoxScenario":
        return cls(200.0, RatioInterval(0.3, 0.5), RatioInterval(0.2, 0.8))

    @classmethod
    def sample(cls, rng: np.random.Generator) -> "AsymRatioBoxScenario":
        V = _sample_volume(rng)
        return cls(V, _sample_asym_interval(rng), _sample_asym_interval(rng))


class AsymFixedHeightScenario(BaseScenario):
    """Asymmetric plan, V, H, r1 and r2 prescribed"""

    tag = ScenarioTag.ASYM_FIXED_HEIGHT
    coordinate_names = ("L1",)

    def __init__(self, V: float, H: float, ratios: AsymRatios):
        super().__init__(V)
        self.H = require_positive("H", H)
        self.ratios = ratios

    def solve(self) -> OptimizationResult:
        return optimize_asym_fixed_height(self.V, self.H, self.ratios)

    def free_coordinates(self, result: OptimizationResult) -> Tuple[float, ...]:
        return (result.dims.L1,)

    def describe(self) -> str:
        return f"V={self.V:g}, H={self.H:g}, r1={self.ratios.r1:g}, r2={self.ratios.r2:g}"

    @classmethod
    def worked_example(cls) -> "AsymFixedHeightScenario":
        # House A
        return cls(549.5, 3.6, AsymRatios(8.7 / 13.7, 4.6 / 14.9))

    @classmethod
    def sample(cls, rng: np.random.Generator) -> "AsymFixedHeightScenario":
        V = _sample_volume(rng)
        H = float(rng.uniform(2.5, 8.0))
        return cls(V, H, AsymRatios(_sample_asym_ratio(rng), _sample_asym_ratio(rng)))


SCENARIOS: Dict[str, Type[BaseScenario]] = {
    "sym-fixed": SymFixedRatioScenario,
    "sym-interval": SymRatioIntervalScenario,
    "asym-fixed": AsymFixedRatiosScenario,
    "asym-box": AsymRatioBoxScenario,
    "asym-height": AsymFixedHeightScenario,
}
