"""
Superposition operators, shift operators, the metric of convergence in
measure and the factorisation T = T_N ∘ S_Phi.
"""

from .kernel import DEFAULT_CONTINUITY_TOLERANCE, KernelConditionsReport, SuperpositionKernel, superpose
from .shift import ShiftOperator, shift_apply
from .metric import deviation_measure, rho_along, rho_metric, rho_on
from .factor import FactorizationReport, compose_superposition, factor_atomic, verify_factorization

__all__ = [
    "DEFAULT_CONTINUITY_TOLERANCE",
    "KernelConditionsReport",
    "SuperpositionKernel",
    "superpose",
    "ShiftOperator",
    "shift_apply",
    "deviation_measure",
    "rho_along",
    "rho_metric",
    "rho_on",
    "FactorizationReport",
    "compose_superposition",
    "factor_atomic",
    "verify_factorization",
]
