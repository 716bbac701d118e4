"""
Acceptance thresholds used by the numerical oracle
"""
import math
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Tolerances:
    """Thresholds for KKT residuals and closed-form vs numerical agreement"""

    # KKT residuals, all scale-free
    stationarity: float = 1e-8
    primal: float = 1e-12
    dual: float = 1e-12
    slackness: float = 1e-8
    # relative agreement between closed form and numerical optimum
    objective: float = 1e-6
    point: float = 1e-5

    @classmethod
    def names(cls) -> tuple:
        return tuple(f.name for f in fields(cls))

    def with_overrides(self, **overrides: float) -> "Tolerances":
        """
        Copy with some thresholds replaced

        Raises:
            ValueError: On unknown names or non-positive values
        """
        unknown = sorted(set(overrides) - set(self.names()))
        if unknown:
            raise ValueError(f"unknown tolerance(s): {', '.join(unknown)}; known: {', '.join(self.names())}")
        for name, value in overrides.items():
            if not math.isfinite(value) or value <= 0:
                raise ValueError(f"tolerance {name} must be a positive number, got {value!r}")
        return replace(self, **{name: float(value) for name, value in overrides.items()})
