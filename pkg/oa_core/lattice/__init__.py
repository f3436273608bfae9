"""
Finite vector-lattice model: spaces, elements, lattice operations and fragments.
"""

from .space import Space, Element, LatticeKind, Point, lattice_op, join, meet, is_disjoint
from .fragments import (
    DEFAULT_SUPPORT_CAP,
    FragmentOp,
    FragmentAlgebraReport,
    fragments,
    is_fragment,
    fragment_bool_op,
    fragment_chain,
    is_lateral_chain,
    fragment_algebra_report,
    ordered_support,
)

__all__ = [
    "Space",
    "Element",
    "LatticeKind",
    "Point",
    "lattice_op",
    "join",
    "meet",
    "is_disjoint",
    "DEFAULT_SUPPORT_CAP",
    "FragmentOp",
    "FragmentAlgebraReport",
    "fragments",
    "is_fragment",
    "fragment_bool_op",
    "fragment_chain",
    "is_lateral_chain",
    "fragment_algebra_report",
    "ordered_support",
]
