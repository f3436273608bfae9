"""
Lattice operations of atomic operators, built symbolically.

For T and S atomic subordinate to the same Phi the operations act pointwise:
(T v S)x = Tx v Sx, (T ^ S)x = Tx ^ Sx, T⁺x = (Tx)⁺, T⁻x = (Tx)⁻ and
|T|x = |Tx|. Each target t only sees the source phi(t), so the result kernel
combines the entries at (phi(t), t) with max, min and abs.
"""

import logging
from fractions import Fraction
from typing import Optional, Sequence, Union

from ..errors import NotAtomicError, StructuralError
from ..kernel_lang import ZERO, KernelExpr, maximum, minimum, modulus, negate
from ..operators import BINARY_KINDS, KernelOperator, OperatorLatticeKind
from ..projections import BooleanHom
from ..utils.sampling import DEFAULT_GRID
from .atomicity import is_atomic, subordinate_hom

logger = logging.getLogger(__name__)


def _combine(kind: OperatorLatticeKind, a: KernelExpr, b: KernelExpr) -> KernelExpr:
    if kind is OperatorLatticeKind.JOIN:
        return maximum(a, b)
    if kind is OperatorLatticeKind.MEET:
        return minimum(a, b)
    if kind is OperatorLatticeKind.POS:
        return ZERO if a == ZERO else maximum(a, ZERO)
    if kind is OperatorLatticeKind.NEG:
        return ZERO if a == ZERO else maximum(negate(a), ZERO)
    return modulus(a)


def pointwise_lattice_op(kind: Union[OperatorLatticeKind, str], T: KernelOperator,
                         S: Optional[KernelOperator] = None, h: Optional[BooleanHom] = None,
                         grid: Sequence[Fraction] = DEFAULT_GRID) -> KernelOperator:
    """Kernel of T v S, T ^ S, T⁺, T⁻ or |T| for atomic T (and S).

    Without ``h`` a common subordinate homomorphism is derived from the
    kernels; NotAtomicError is raised when the inputs are not atomic
    subordinate to one homomorphism.
    """
    kind = OperatorLatticeKind.parse(kind)
    if kind in BINARY_KINDS and S is None:
        raise StructuralError(f"{kind.value} needs a second operator")
    if kind not in BINARY_KINDS and S is not None:
        raise StructuralError(f"{kind.value} takes a single operator")
    if S is not None:
        T._check(S)

    if h is None:
        h = subordinate_hom(T, S, grid)
        if h is None:
            raise NotAtomicError("Operators are not atomic subordinate to a common homomorphism")
    for label, op in (("first", T), ("second", S)):
        if op is None:
            continue
        report = is_atomic(op, h, grid=grid)
        if not report.verdict:
            raise NotAtomicError(f"The {label} operator is not atomic subordinate to the homomorphism",
                                 witness=report.witnesses[0])

    entries = []
    for t in T.target.points:
        s = h.phi(t)
        a = T.entry(s, t)
        b = S.entry(s, t) if S is not None else ZERO
        entries.append((s, t, _combine(kind, a, b)))
    result = KernelOperator(T.source, T.target, tuple(entries))
    logger.debug(f"Pointwise {kind.value} built with {len(result.entries)} kernel entries")
    return result
