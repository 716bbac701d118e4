"""
Envelope surfaces written directly from the geometric model

These take numpy arrays (or floats) and broadcast, so the grid search can
evaluate a whole tensor grid at once. They only encode the model
equations, never the closed-form optima.
"""
import numpy as np


def sym_envelope_surface(B, r, V):
    """S(B, r) = 4Vr/(B(2r-1)) + B^2(2r-1) for a symmetric plan of volume V"""
    r = np.asarray(r, dtype=float)
    B = np.asarray(B, dtype=float)
    m = 2.0 * r - 1.0
    return 4.0 * V * r / (B * m) + B ** 2 * m


def asym_envelope_surface(L1, L2, r1, r2, V):
    """S(L1, L2, r1, r2) = k L1 L2 + 2V(L1 + L2)/(L1 L2 k) with k = r1 + r2 - r1 r2"""
    L1 = np.asarray(L1, dtype=float)
    L2 = np.asarray(L2, dtype=float)
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    k = r1 + r2 - r1 * r2
    return k * L1 * L2 + 2.0 * V * (L1 + L2) / (L1 * L2 * k)


def asym_fixed_height_surface(L1, V, H, k):
    """Envelope as a function of L1 once V, H and k fix L2 = V/(H k L1)"""
    L1 = np.asarray(L1, dtype=float)
    L2 = V / (H * k * L1)
    return k * L1 * L2 + 2.0 * (L1 + L2) * H


def sym_fixed_floor_surface(r, F, H):
    """Envelope of a symmetric plan with floor area F and height H, as a function of r"""
    r = np.asarray(r, dtype=float)
    B = np.sqrt(F / (2.0 * r - 1.0))
    return 4.0 * r * B * H + F
