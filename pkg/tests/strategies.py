"""
Hypothesis strategies shared by the test modules.
"""

from hypothesis import strategies as st

from oa_core.lattice import Space


def rationals(bound: int = 6, max_denominator: int = 4):
    """Small exact rationals."""
    return st.fractions(min_value=-bound, max_value=bound, max_denominator=max_denominator)


def elements_of(space: Space, bound: int = 6):
    """Elements of a fixed space."""
    return st.lists(rationals(bound), min_size=len(space), max_size=len(space)).map(space.element)


def nonnegative_elements_of(space: Space, bound: int = 6):
    values = st.fractions(min_value=0, max_value=bound, max_denominator=4)
    return st.lists(values, min_size=len(space), max_size=len(space)).map(space.element)


def seeds():
    return st.integers(min_value=0, max_value=2**32 - 1)
