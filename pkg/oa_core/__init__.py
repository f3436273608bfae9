"""
oa-core: exact calculus for orthogonally additive operators

Finite vector lattices with exact rational arithmetic: fragments and order
projections, kernel-form orthogonally additive operators, atomicity and the
band projection onto the atomic band, factorisation through shift and
superposition operators, and minimal extension from lateral ideals.
"""

__version__ = "0.1.0"

from .engine import CalculusConfig, CalculusEngine, CommandResult
from .errors import (
    EnumerationCapError,
    HomomorphismError,
    KernelEvaluationError,
    KernelSyntaxError,
    LateralIdealError,
    MathematicalFailure,
    NotAFragmentError,
    NotAtomicError,
    OACoreError,
    PositivityError,
    StructuralError,
    WorkspaceError,
)
from .lattice import Element, Space, fragments, lattice_op
from .projections import BooleanHom, OrderProjection, hom_apply
from .kernel_lang import parse
from .operators import KernelOperator, brute_lattice_op, eval_op, oracle_search
from .atomic import band_projection, is_atomic, pointwise_lattice_op
from .superposition import SuperpositionKernel, factor_atomic, rho_metric
from .lateral import LateralIdeal, PartialMap, minimal_extension
from .validation import SuiteRunner
from .workspace import Workspace, load_workspace
from .workflows import run_workspace_checks, verify_suites

__all__ = [
    "CalculusConfig",
    "CalculusEngine",
    "CommandResult",
    "EnumerationCapError",
    "HomomorphismError",
    "KernelEvaluationError",
    "KernelSyntaxError",
    "LateralIdealError",
    "MathematicalFailure",
    "NotAFragmentError",
    "NotAtomicError",
    "OACoreError",
    "PositivityError",
    "StructuralError",
    "WorkspaceError",
    "Element",
    "Space",
    "fragments",
    "lattice_op",
    "BooleanHom",
    "OrderProjection",
    "hom_apply",
    "parse",
    "KernelOperator",
    "brute_lattice_op",
    "eval_op",
    "oracle_search",
    "band_projection",
    "is_atomic",
    "pointwise_lattice_op",
    "SuperpositionKernel",
    "factor_atomic",
    "rho_metric",
    "LateralIdeal",
    "PartialMap",
    "minimal_extension",
    "SuiteRunner",
    "Workspace",
    "load_workspace",
    "run_workspace_checks",
    "verify_suites",
]
