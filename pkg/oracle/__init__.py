"""
Oracle Package
Independent numerical checks of the closed-form optima
"""

from .tolerances import Tolerances
from .objectives import (
    asym_envelope_surface,
    asym_fixed_height_surface,
    sym_envelope_surface,
    sym_fixed_floor_surface,
)
from .minimizers import (
    EvaluationError,
    ScalarObjective,
    bracketed_golden_min,
    expand_upper_bracket,
    golden_section_min,
    grid_refine_min,
)
from .kkt import (
    KktReport,
    asym_envelope_gradient,
    asym_lagrangian,
    asym_lagrangian_gradient,
    central_difference,
    kkt_check_asym,
    kkt_check_sym,
    sym_envelope_gradient,
    sym_lagrangian,
    sym_lagrangian_gradient,
)
from .verify import (
    OracleComparison,
    degeneracy_search_asym,
    degeneracy_search_sym,
    degeneracy_search_sym_fixed_floor,
    numerical_optimum,
    verify_scenario,
)
from .trial_runner import TrialRunner, TrialSummary

__all__ = [
    'Tolerances',
    'sym_envelope_surface',
    'asym_envelope_surface',
    'asym_fixed_height_surface',
    'sym_fixed_floor_surface',
    'EvaluationError',
    'ScalarObjective',
    'golden_section_min',
    'expand_upper_bracket',
    'bracketed_golden_min',
    'grid_refine_min',
    'KktReport',
    'sym_envelope_gradient',
    'asym_envelope_gradient',
    'sym_lagrangian',
    'sym_lagrangian_gradient',
    'asym_lagrangian',
    'asym_lagrangian_gradient',
    'central_difference',
    'kkt_check_sym',
    'kkt_check_asym',
    'OracleComparison',
    'numerical_optimum',
    'verify_scenario',
    'degeneracy_search_sym',
    'degeneracy_search_asym',
    'degeneracy_search_sym_fixed_floor',
    'TrialRunner',
    'TrialSummary',
]
