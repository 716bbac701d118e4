"""
CLI Package
Subcommands optimize, degenerate, analyze, sweep and check
"""

from .parser import OUTPUT_FORMATS, UsageError, build_parser
from .commands import (
    HANDLERS,
    cmd_analyze,
    cmd_check,
    cmd_degenerate,
    cmd_optimize,
    cmd_sweep,
    emit,
    render_result,
)
from .sweep import Axis, Marker, SweepGrid, SweepOverrides, build_sweep

__all__ = [
    'OUTPUT_FORMATS',
    'UsageError',
    'build_parser',
    'HANDLERS',
    'cmd_optimize',
    'cmd_degenerate',
    'cmd_analyze',
    'cmd_sweep',
    'cmd_check',
    'emit',
    'render_result',
    'Axis',
    'Marker',
    'SweepGrid',
    'SweepOverrides',
    'build_sweep',
]
