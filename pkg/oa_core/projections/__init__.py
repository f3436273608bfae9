"""
Order projections and Boolean homomorphisms of projection algebras.
"""

from .projection import OrderProjection, apply_projection, support_projection
from .hom import (
    DEFAULT_FULL_CAP,
    BooleanHom,
    SetMapTable,
    HomCheckReport,
    all_subsets,
    hom_apply,
    hom_apply_projection,
    hom_check,
)

__all__ = [
    "OrderProjection",
    "apply_projection",
    "support_projection",
    "DEFAULT_FULL_CAP",
    "BooleanHom",
    "SetMapTable",
    "HomCheckReport",
    "all_subsets",
    "hom_apply",
    "hom_apply_projection",
    "hom_check",
]
