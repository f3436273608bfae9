"""
Exact rational parsing and formatting.

Documents carry rationals as integers or "p/q" strings; reports render them
back the same way so that output is stable across runs.
"""

import math
from fractions import Fraction
from typing import Any

from ..errors import StructuralError

Rational = Fraction


def to_rational(value: Any) -> Fraction:
    """Convert a document value to an exact rational."""
    if isinstance(value, bool):
        raise StructuralError(f"Expected a rational, got boolean {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise StructuralError(f"Expected a finite rational, got {value!r}")
        # repr gives the shortest decimal that round-trips, so 0.1 stays 1/10
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise StructuralError(f"Invalid rational {value!r}: {e}") from e
    raise StructuralError(f"Expected a rational, got {type(value).__name__} {value!r}")


def format_rational(value: Fraction) -> str:
    """Render a rational as "p" or "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
