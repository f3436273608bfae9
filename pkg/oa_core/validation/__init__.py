"""
Property suites and the runner behind ``oa verify-all``.
"""

from .engine import ALL, SuiteReport, SuiteRunner
from .suites import SUITES, PropertyResult, SuiteContext, Tally
from .generators import (
    random_atomic_operator,
    random_hom,
    random_ideal,
    random_operator,
    random_superposition_kernel,
)

__all__ = [
    "ALL",
    "SuiteReport",
    "SuiteRunner",
    "SUITES",
    "PropertyResult",
    "SuiteContext",
    "Tally",
    "random_atomic_operator",
    "random_hom",
    "random_ideal",
    "random_operator",
    "random_superposition_kernel",
]
