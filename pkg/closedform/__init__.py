"""
Closed-Form Optimizers Package
Minimal-envelope L-plans for every constraint scenario
"""

from .results import (
    ActiveConstraint,
    BoundSide,
    CompactnessRatio,
    OptimizationResult,
    RatioInterval,
    ScenarioTag,
)
from .optimizers import (
    asym_min_envelope,
    detect_degenerate_cuboid,
    optimize_asym_fixed_height,
    optimize_asym_fixed_ratios,
    optimize_asym_ratio_box,
    optimize_sym_fixed_ratio,
    optimize_sym_ratio_interval,
    sym_min_envelope,
)
from .compactness import compactness, compactness_at_width, compactness_of
from .scenarios import (
    SCENARIOS,
    AsymFixedHeightScenario,
    AsymFixedRatiosScenario,
    AsymRatioBoxScenario,
    BaseScenario,
    SymFixedRatioScenario,
    SymRatioIntervalScenario,
)

__all__ = [
    'ActiveConstraint',
    'BoundSide',
    'CompactnessRatio',
    'OptimizationResult',
    'RatioInterval',
    'ScenarioTag',
    'sym_min_envelope',
    'asym_min_envelope',
    'optimize_sym_fixed_ratio',
    'optimize_sym_ratio_interval',
    'optimize_asym_fixed_ratios',
    'optimize_asym_ratio_box',
    'optimize_asym_fixed_height',
    'detect_degenerate_cuboid',
    'compactness',
    'compactness_of',
    'compactness_at_width',
    'BaseScenario',
    'SymFixedRatioScenario',
    'SymRatioIntervalScenario',
    'AsymFixedRatiosScenario',
    'AsymRatioBoxScenario',
    'AsymFixedHeightScenario',
    'SCENARIOS',
]
