"""
Presentation helpers: half-up rounding and stable float text
"""
import math
from decimal import ROUND_HALF_UP, Decimal


def round_half_up(value: float, places: int) -> Decimal:
    """
    Round a float half-up to `places` decimals

    The float is read through its shortest repr, so 234.885 becomes 234.89
    rather than falling victim to its binary expansion.

    Args:
        value: Finite number to round
        places: Number of decimals, 0 or more

    Returns:
        The rounded value as a Decimal
    """
    if not math.isfinite(value):
        raise ValueError(f"cannot round non-finite value {value!r}")
    exponent = Decimal(1).scaleb(-places)
    return Decimal(repr(float(value))).quantize(exponent, rounding=ROUND_HALF_UP)


def fmt_fixed(value: float, places: int) -> str:
    """Half-up rounded text with exactly `places` decimals, dot separator"""
    return f"{round_half_up(value, places):.{places}f}"


def fmt_exact(value: float) -> str:
    """Shortest text that reads back to the same float"""
    return repr(float(value))
