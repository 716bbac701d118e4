"""
Immutable value types describing symmetric and asymmetric L-shaped plans

All lengths are meters. The two aspect-ratio conventions are kept apart on
purpose: a symmetric plan uses r = L/B > 1, an asymmetric plan uses
r_i = B_i/L_i in (0, 1). Neither type converts into the other.
"""
import math
from dataclasses import dataclass

from .errors import DegeneracyError, GeometryError

# Values closer than this (relative) to a forbidden boundary are rejected
DEGENERACY_TOL = 1e-9


def require_positive(name: str, value: float) -> float:
    """
    Coerce to float and check the value is finite and strictly positive

    Args:
        name: Field name used in the error message
        value: Candidate value

    Returns:
        The value as a float

    Raises:
        GeometryError: If the value is non-numeric, non-finite or not positive
    """
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise GeometryError(f"{name} must be a number, got {value!r}", field=name, rule="numeric") from None
    if not math.isfinite(number) or number <= 0:
        raise GeometryError(f"{name} must be a positive finite number, got {value!r}", field=name, rule="positive")
    return number


@dataclass(frozen=True)
class SymRatio:
    """Wing aspect ratio r = L/B of a symmetric plan"""

    r: float
    is_degenerate: bool = False

    def __post_init__(self):
        r = require_positive("r", self.r)
        object.__setattr__(self, "r", r)
        if self.is_degenerate:
            if r != 1.0:
                raise GeometryError(f"a degenerate symmetric ratio is exactly 1, got {r}", field="r", rule="r=1")
            return
        if r < 1.0 - DEGENERACY_TOL:
            raise GeometryError(f"wing aspect ratio r = L/B must exceed 1, got {r}", field="r", rule="r>1")
        if r - 1.0 <= DEGENERACY_TOL:
            raise DegeneracyError(f"r = {r} makes L = B and the L-form is lost", field="r")

    @classmethod
    def degenerate(cls) -> "SymRatio":
        """The cuboid ratio r = 1, tagged as degenerate"""
        return cls(1.0, is_degenerate=True)

    def __float__(self) -> float:
        return self.r


@dataclass(frozen=True)
class AsymRatios:
    """Wing aspect ratios r1 = B1/L1 and r2 = B2/L2 of an asymmetric plan"""

    r1: float
    r2: float
    is_degenerate: bool = False

    def __post_init__(self):
        for name in ("r1", "r2"):
            value = require_positive(name, getattr(self, name))
            object.__setattr__(self, name, value)
            if value > 1.0 + DEGENERACY_TOL:
                raise GeometryError(
                    f"{name} = B/L must be below 1, got {value}", field=name, rule="r<1"
                )
            if value >= 1.0 - DEGENERACY_TOL:
                if not self.is_degenerate:
                    raise DegeneracyError(f"{name} = {value} makes a wing square", field=name)
                object.__setattr__(self, name, min(value, 1.0))

    @classmethod
    def degenerate(cls, r1: float = 1.0, r2: float = 1.0) -> "AsymRatios":
        """Ratios in (0, 1] where 1 is allowed, tagged as degenerate"""
        return cls(r1, r2, is_degenerate=True)

    @property
    def k(self) -> float:
        """Fill factor r1 + r2 - r1*r2"""
        return self.r1 + self.r2 - self.r1 * self.r2


@dataclass(frozen=True)
class FillFactor:
    """Fraction of the bounding rectangle L1 x L2 covered by the L-footprint"""

    k: float

    def __post_init__(self):
        k = require_positive("k", self.k)
        if k > 1.0 + DEGENERACY_TOL:
            raise GeometryError(f"fill factor must not exceed 1, got {k}", field="k", rule="k<=1")
        object.__setattr__(self, "k", min(k, 1.0))

    def __float__(self) -> float:
        return self.k


@dataclass(frozen=True)
class SymDims:
    """Symmetric L-plan: two identical wings of length L and width B, height H"""

    L: float
    B: float
    H: float
    is_degenerate: bool = False

    def __post_init__(self):
        for name in ("L", "B", "H"):
            object.__setattr__(self, name, require_positive(name, getattr(self, name)))
        ratio = self.L / self.B
        if ratio < 1.0 - DEGENERACY_TOL:
            raise GeometryError(
                f"wing length L must be at least the width B, got L={self.L}, B={self.B}",
                field="L",
                rule="L>=B",
            )
        close_to_square = ratio - 1.0 <= DEGENERACY_TOL
        if self.is_degenerate and not close_to_square:
            raise GeometryError(
                f"a degenerate symmetric plan has L = B, got L={self.L}, B={self.B}", field="L", rule="L=B"
            )
        if close_to_square and not self.is_degenerate:
            raise DegeneracyError(f"L = B = {self.B} turns the plan into a cuboid", field="L")

    @classmethod
    def cuboid(cls, side: float, H: float) -> "SymDims":
        """Degenerate plan with L = B = side"""
        return cls(side, side, H, is_degenerate=True)

    @property
    def ratio(self) -> SymRatio:
        if self.is_degenerate:
            return SymRatio.degenerate()
        return SymRatio(self.L / self.B)

    def as_asym(self) -> "AsymDims":
        """The same building described with the asymmetric parameters"""
        return AsymDims(self.L, self.L, self.B, self.B, self.H, is_degenerate=self.is_degenerate)


@dataclass(frozen=True)
class AsymDims:
    """Asymmetric L-plan: wings L1 x B1 and L2 x B2, common height H"""

    L1: float
    L2: float
    B1: float
    B2: float
    H: float
    is_degenerate: bool = False

    def __post_init__(self):
        for name in ("L1", "L2", "B1", "B2", "H"):
            object.__setattr__(self, name, require_positive(name, getattr(self, name)))
        for wing in (1, 2):
            length = getattr(self, f"L{wing}")
            width = getattr(self, f"B{wing}")
            ratio = width / length
            if ratio > 1.0 + DEGENERACY_TOL:
                raise GeometryError(
                    f"wing {wing}: B{wing} must be smaller than L{wing}, got B{wing}={width}, L{wing}={length}",
                    field=f"B{wing}",
                    rule=f"B{wing}<L{wing}",
                )
            if ratio >= 1.0 - DEGENERACY_TOL and not self.is_degenerate:
                raise DegeneracyError(
                    f"degenerate wing {wing}: B{wing} must be smaller than L{wing}, got B{wing} = L{wing} = {length}",
                    field=f"B{wing}",
                )

    @classmethod
    def degenerate(cls, L1: float, L2: float, B1: float, B2: float, H: float) -> "AsymDims":
        """Plan where B_i = L_i is allowed, tagged as degenerate"""
        return cls(L1, L2, B1, B2, H, is_degenerate=True)

    @property
    def ratios(self) -> AsymRatios:
        return AsymRatios(self.B1 / self.L1, self.B2 / self.L2, is_degenerate=self.is_degenerate)
