"""
Result and constraint types produced by the closed-form optimizers
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from geometry import (
    DEGENERACY_TOL,
    AsymDims,
    DegeneracyError,
    GeometryError,
    InconsistencyError,
    SymDims,
    asym_envelope,
    asym_volume,
    sym_envelope,
    sym_volume,
)

# Recomputing volume/envelope from the returned dims must match to this
SELF_CHECK_REL_TOL = 1e-10


class ScenarioTag(str, Enum):
    """Constraint scenario an OptimizationResult was computed for"""

    SYM_FIXED_RATIO = "SymFixedRatio"
    SYM_RATIO_INTERVAL = "SymRatioInterval"
    ASYM_FIXED_RATIOS = "AsymFixedRatios"
    ASYM_RATIO_BOX = "AsymRatioBox"
    ASYM_FIXED_HEIGHT = "AsymFixedHeight"
    DEGENERATE_CUBOID = "DegenerateCuboid"


class BoundSide(str, Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class ActiveConstraint:
    """An interval endpoint that holds with equality at the optimum"""

    name: str
    side: BoundSide

    def __str__(self) -> str:
        return f"{self.name} {self.side.value}"


@dataclass(frozen=True)
class RatioInterval:
    """Closed interval [lo, hi] of admissible aspect ratios"""

    lo: float
    hi: float

    def __post_init__(self):
        for name in ("lo", "hi"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise GeometryError(f"interval bound {name} must be a number, got {value!r}", field=name, rule="numeric") from None
            if not math.isfinite(value):
                raise GeometryError(f"interval bound {name} must be finite, got {value}", field=name, rule="finite")
            object.__setattr__(self, name, value)
        if not self.lo < self.hi:
            raise GeometryError(f"interval needs lo < hi, got [{self.lo}, {self.hi}]", field="lo", rule="lo<hi")

    def require_symmetric(self, name: str = "r") -> "RatioInterval":
        """
        Check the interval is usable for r = L/B (both bounds above 1)

        Raises:
            DegeneracyError: If lo is within tolerance of 1
            GeometryError: If lo is below 1
        """
        if self.lo < 1.0 - DEGENERACY_TOL:
            raise GeometryError(
                f"{name} interval [{self.lo}, {self.hi}] must satisfy lo > 1", field=name, rule="lo>1"
            )
        if self.lo - 1.0 <= DEGENERACY_TOL:
            raise DegeneracyError(f"{name} interval starts at 1 where the L-form is lost", field=name)
        return self

    def require_asymmetric(self, name: str = "r") -> "RatioInterval":
        """
        Check the interval is usable for r = B/L (strictly inside (0, 1))

        Raises:
            DegeneracyError: If hi is within tolerance of 1
            GeometryError: If lo is not positive or hi exceeds 1
        """
        if self.lo <= 0.0:
            raise GeometryError(f"{name} interval [{self.lo}, {self.hi}] must satisfy lo > 0", field=name, rule="lo>0")
        if self.hi > 1.0 + DEGENERACY_TOL:
            raise GeometryError(f"{name} interval [{self.lo}, {self.hi}] must satisfy hi < 1", field=name, rule="hi<1")
        if self.hi >= 1.0 - DEGENERACY_TOL:
            raise DegeneracyError(f"{name} interval reaches 1 where the wing becomes square", field=name)
        return self

    def contains(self, value: float) -> bool:
        return self.lo <= value <= self.hi


Dims = Union[SymDims, AsymDims]


@dataclass(frozen=True)
class OptimizationResult:
    """Optimal dimensions and envelope for one scenario"""

    scenario: ScenarioTag
    dims: Dims
    envelope: float
    input_volume: float
    active_constraints: Tuple[ActiveConstraint, ...] = ()
    degenerate: bool = False

    @property
    def is_symmetric(self) -> bool:
        return isinstance(self.dims, SymDims)

    def recomputed_volume(self) -> float:
        return sym_volume(self.dims) if self.is_symmetric else asym_volume(self.dims)

    def recomputed_envelope(self) -> float:
        return sym_envelope(self.dims) if self.is_symmetric else asym_envelope(self.dims)

    def verify(self, rel_tol: float = SELF_CHECK_REL_TOL) -> "OptimizationResult":
        """
        Recompute volume and envelope from dims and compare

        Returns:
            self, so optimizers can `return result.verify()`

        Raises:
            InconsistencyError: If either recomputation disagrees beyond rel_tol
        """
        checks = (
            ("volume", self.recomputed_volume(), self.input_volume),
            ("envelope", self.recomputed_envelope(), self.envelope),
        )
        for label, recomputed, stored in checks:
            if not math.isclose(recomputed, stored, rel_tol=rel_tol, abs_tol=0.0):
                raise InconsistencyError(
                    f"{self.scenario.value}: recomputed {label} {recomputed!r} differs from {stored!r}"
                )
        return self

    def lengths(self) -> Tuple[float, ...]:
        """All length-valued fields of dims, in declaration order"""
        d = self.dims
        if self.is_symmetric:
            return (d.L, d.B, d.H)
        return (d.L1, d.L2, d.B1, d.B2, d.H)


@dataclass(frozen=True)
class CompactnessRatio:
    """Scale-free ratio S / S_min, at least 1 for any real plan"""

    value: float

    def __post_init__(self):
        if not self.value >= 1.0 - 1e-12:
            raise InconsistencyError(f"compactness ratio must be at least 1, got {self.value}")

    def __float__(self) -> float:
        return self.value
