"""
Scale-free compactness S / S_min for symmetric plans of fixed ratio
"""
from geometry import (
    DegeneracyError,
    InconsistencyError,
    SymDims,
    SymRatio,
    require_positive,
    sym_envelope,
    sym_volume,
)
from .optimizers import sym_min_envelope
from .results import CompactnessRatio

# S may undercut S_min by this relative amount before it is called inconsistent
COMPACTNESS_TOL = 1e-9


def _ratio_value(r: SymRatio) -> float:
    if not isinstance(r, SymRatio):
        raise TypeError(f"r must be a SymRatio, got {type(r).__name__}")
    if r.is_degenerate:
        raise DegeneracyError("compactness is defined for r > 1 only", field="r")
    return r.r


def compactness(S: float, V: float, r: SymRatio) -> CompactnessRatio:
    """
    Compare an envelope with the smallest one possible for (V, r)

    Args:
        S: Envelope of the design (m²)
        V: Its volume (m³)
        r: Its wing aspect ratio L/B

    Returns:
        S / S_min, at least 1

    Raises:
        InconsistencyError: If S is below S_min, i.e. no symmetric L-plan
            with this V and r can have that envelope
    """
    S = require_positive("S", S)
    V = require_positive("V", V)
    s_min = sym_min_envelope(V, _ratio_value(r))
    if S < s_min * (1.0 - COMPACTNESS_TOL):
        raise InconsistencyError(
            f"S={S} is below the minimal envelope {s_min} for V={V}, r={r.r}"
        )
    return CompactnessRatio(max(S / s_min, 1.0))


def compactness_of(d: SymDims) -> CompactnessRatio:
    """Compactness of a concrete symmetric plan"""
    return compactness(sym_envelope(d), sym_volume(d), d.ratio)


def compactness_at_width(B: float, r: SymRatio, V: float) -> CompactnessRatio:
    """
    Compactness of the plan of width B, ratio r and volume V, in the form
    (4Vr + B^3 (2r-1)^2) / (3 B (2Vr(2r-1))^(2/3))
    """
    B = require_positive("B", B)
    V = require_positive("V", V)
    ratio = _ratio_value(r)
    m = 2.0 * ratio - 1.0
    value = (4.0 * V * ratio + B ** 3 * m ** 2) / (3.0 * B * (2.0 * V * ratio * m) ** (2.0 / 3.0))
    return CompactnessRatio(max(value, 1.0) if value > 1.0 - COMPACTNESS_TOL else value)
