"""
Volumes, envelope areas and floor areas of L-shaped plans

The envelope S is the flat-roof area plus the wall area. The slab in
contact with the ground is never part of S.
"""
from .dims import AsymDims, AsymRatios, FillFactor, SymDims, SymRatio, require_positive


def _expect(value, kind: type, name: str):
    if not isinstance(value, kind):
        raise TypeError(f"{name} must be a {kind.__name__}, got {type(value).__name__}")
    return value


def sym_floor_area(d: SymDims) -> float:
    """Footprint 2LB - B^2 of a symmetric plan"""
    _expect(d, SymDims, "d")
    return 2.0 * d.L * d.B - d.B ** 2


def sym_volume(d: SymDims) -> float:
    """Volume H(2LB - B^2) of a symmetric plan"""
    return d.H * sym_floor_area(d)


def sym_envelope(d: SymDims) -> float:
    """Envelope 4LH + 2LB - B^2: four wall runs of length L plus the roof"""
    return 4.0 * d.L * d.H + sym_floor_area(d)


def sym_height_for_volume(V: float, L: float, B: float) -> float:
    """
    Height that gives a symmetric plan L x B the volume V

    Args:
        V: Volume (m³)
        L: Wing length (m)
        B: Wing width (m)

    Returns:
        H = V / (2LB - B^2)
    """
    V = require_positive("V", V)
    L = require_positive("L", L)
    B = require_positive("B", B)
    return V / (2.0 * L * B - B ** 2)


def sym_envelope_parametric(B: float, r: SymRatio, V: float) -> float:
    """
    Envelope of the symmetric plan of width B, ratio r and volume V

    With L = rB and H = V / (B^2 (2r - 1)) the envelope becomes
    4Vr / (B(2r - 1)) + B^2 (2r - 1).

    Args:
        B: Wing width (m)
        r: Wing aspect ratio L/B
        V: Volume (m³)

    Returns:
        Envelope area (m²)
    """
    B = require_positive("B", B)
    V = require_positive("V", V)
    _expect(r, SymRatio, "r")
    m = 2.0 * r.r - 1.0
    return 4.0 * V * r.r / (B * m) + B ** 2 * m


def fill_factor(r: AsymRatios) -> FillFactor:
    """Fraction k = r1 + r2 - r1*r2 of the bounding rectangle covered by the plan"""
    _expect(r, AsymRatios, "r")
    return FillFactor(r.k)


def asym_floor_area(d: AsymDims) -> float:
    """Footprint L1*L2*k, which is also the roof area"""
    _expect(d, AsymDims, "d")
    return d.L1 * d.L2 * fill_factor(d.ratios).k


def asym_volume(d: AsymDims) -> float:
    """Volume H*L1*L2*k of an asymmetric plan"""
    return d.H * asym_floor_area(d)


def asym_height_for_volume(V: float, L1: float, L2: float, r: AsymRatios) -> float:
    """
    Height that gives an asymmetric plan the volume V

    Args:
        V: Volume (m³)
        L1: Length of wing 1 (m)
        L2: Length of wing 2 (m)
        r: Wing aspect ratios B1/L1, B2/L2

    Returns:
        H = V / (L1*L2*k)
    """
    V = require_positive("V", V)
    L1 = require_positive("L1", L1)
    L2 = require_positive("L2", L2)
    k = fill_factor(r).k
    return V / (L1 * L2 * k)


def asym_envelope(d: AsymDims) -> float:
    """
    Envelope of an asymmetric plan

    The wall term 2(L1 + L2)H is the full perimeter of the L-footprint
    (it equals the perimeter of the bounding rectangle) times the height,
    so the inner-corner walls are included.
    """
    return asym_floor_area(d) + 2.0 * (d.L1 + d.L2) * d.H
