"""
Geometry Package
Exact model of symmetric and asymmetric L-shaped plans
"""

from .errors import DegeneracyError, GeometryError, InconsistencyError
from .dims import (
    DEGENERACY_TOL,
    AsymDims,
    AsymRatios,
    FillFactor,
    SymDims,
    SymRatio,
    require_positive,
)
from .model import (
    asym_envelope,
    asym_floor_area,
    asym_height_for_volume,
    asym_volume,
    fill_factor,
    sym_envelope,
    sym_envelope_parametric,
    sym_floor_area,
    sym_height_for_volume,
    sym_volume,
)

__all__ = [
    'GeometryError',
    'DegeneracyError',
    'InconsistencyError',
    'DEGENERACY_TOL',
    'SymDims',
    'SymRatio',
    'AsymDims',
    'AsymRatios',
    'FillFactor',
    'require_positive',
    'sym_volume',
    'sym_envelope',
    'sym_floor_area',
    'sym_height_for_volume',
    'sym_envelope_parametric',
    'fill_factor',
    'asym_volume',
    'asym_height_for_volume',
    'asym_envelope',
    'asym_floor_area',
]
