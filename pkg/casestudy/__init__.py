"""
Case Study Package
Measured buildings compared with their minimal-envelope counterparts
"""

from .specs import (
    CSV_HEADER,
    SPEC_FORMATS,
    BuildingSpec,
    SpecError,
    SpecParseError,
    SpecValidationError,
    parse_specs,
    spec_from_record,
)
from .analysis import (
    DEFAULT_NEAR_OPTIMAL_THRESHOLD,
    ComparisonReport,
    DerivedParams,
    Verdict,
    analyze,
    analyze_batch,
    derive_parameters,
)
from .report import CSV_SUMMARY_HEADER, REPORT_FORMATS, render_report, render_reports, report_to_dict, report_to_text

__all__ = [
    'CSV_HEADER',
    'SPEC_FORMATS',
    'BuildingSpec',
    'SpecError',
    'SpecParseError',
    'SpecValidationError',
    'parse_specs',
    'spec_from_record',
    'DEFAULT_NEAR_OPTIMAL_THRESHOLD',
    'ComparisonReport',
    'DerivedParams',
    'Verdict',
    'analyze',
    'analyze_batch',
    'derive_parameters',
    'CSV_SUMMARY_HEADER',
    'REPORT_FORMATS',
    'render_report',
    'render_reports',
    'report_to_dict',
    'report_to_text',
]
