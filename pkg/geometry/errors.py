"""
Exceptions shared by every module of the L-shape optimizer
"""
from typing import Optional


class GeometryError(ValueError):
    """Input violates a geometric invariant of the L-plan model"""

    def __init__(self, message: str, field: Optional[str] = None, rule: Optional[str] = None):
        """
        Args:
            message: Human readable description
            field: Name of the offending field (e.g. 'B1'), if any
            rule: Short name of the violated rule (e.g. 'positive')
        """
        super().__init__(message)
        self.field = field
        self.rule = rule


class DegeneracyError(GeometryError):
    """Value sits on the boundary where the L-form collapses into a cuboid"""

    HINT = "use detect_degenerate_cuboid (CLI: `degenerate --volume V`) for the cuboid optimum"

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(f"{message}; {self.HINT}", field=field, rule="degenerate")


class InconsistencyError(ArithmeticError):
    """Internal self-consistency check failed"""
