"""
Utility modules for rendering results
"""
from .formatting import fmt_exact, fmt_fixed, round_half_up

__all__ = ['round_half_up', 'fmt_fixed', 'fmt_exact']
