"""
Orthogonally additive operators in kernel form, the brute-force lattice
oracle and sampled operator checks.
"""

from .kernel_operator import (
    KernelOperator,
    as_expr,
    check_normalized,
    diagonal_operator,
    equal_on_grid,
    eval_op,
    first_difference_on_grid,
    single_point_contributions,
    vanishes_on_grid,
    zero_operator,
)
from .oracle import (
    BINARY_KINDS,
    OperatorLatticeKind,
    OracleResult,
    brute_lattice_op,
    decompositions,
    oracle_search,
)
from .checks import (
    DEFAULT_PRODUCT_GRID_CAP,
    DEFAULT_RESOLUTION,
    DisjointnessReport,
    OACheckReport,
    PositivityReport,
    RegularDecompositionReport,
    check_oa,
    elements_for,
    is_disjointness_preserving,
    is_positive_on_grid,
    lateral_bound,
    order_bound_witness,
    regular_decomposition_check,
    sample_disjoint_pairs,
    seed_elements,
)

__all__ = [
    "KernelOperator",
    "as_expr",
    "check_normalized",
    "diagonal_operator",
    "equal_on_grid",
    "eval_op",
    "first_difference_on_grid",
    "single_point_contributions",
    "vanishes_on_grid",
    "zero_operator",
    "BINARY_KINDS",
    "OperatorLatticeKind",
    "OracleResult",
    "brute_lattice_op",
    "decompositions",
    "oracle_search",
    "DEFAULT_PRODUCT_GRID_CAP",
    "DEFAULT_RESOLUTION",
    "DisjointnessReport",
    "OACheckReport",
    "PositivityReport",
    "RegularDecompositionReport",
    "check_oa",
    "elements_for",
    "is_disjointness_preserving",
    "is_positive_on_grid",
    "lateral_bound",
    "order_bound_witness",
    "regular_decomposition_check",
    "sample_disjoint_pairs",
    "seed_elements",
]
