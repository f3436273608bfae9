"""
Brute-force lattice calculus of orthogonally additive operators.

For operators into a Dedekind complete lattice:

    (T v S)(x) = sup{Ty + Sz : x = y ⊔ z}
    (T ^ S)(x) = inf{Ty + Sz : x = y ⊔ z}
    T⁺(x)      = sup{Ty : y ⊑ x}
    T⁻(x)      = -inf{Ty : y ⊑ x}
    |T|(x)     = sup{Ty - Tz : x = y ⊔ z}

Every decomposition of x is enumerated, so the results here are the ground
truth that the pointwise formulas for atomic operators are compared against.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from ..errors import EnumerationCapError, StructuralError
from ..lattice import DEFAULT_SUPPORT_CAP, Element, Point, ordered_support
from .kernel_operator import KernelOperator, single_point_contributions

logger = logging.getLogger(__name__)


class OperatorLatticeKind(str, Enum):
    JOIN = "join"
    MEET = "meet"
    POS = "pos"
    NEG = "neg"
    MODULUS = "modulus"

    @classmethod
    def parse(cls, value: Union["OperatorLatticeKind", str]) -> "OperatorLatticeKind":
        if isinstance(value, cls):
            return value
        aliases = {"mod": "modulus", "abs": "modulus"}
        return cls(aliases.get(value, value))


BINARY_KINDS = {OperatorLatticeKind.JOIN, OperatorLatticeKind.MEET}


@dataclass
class OracleResult:
    """Exact value of an operator lattice operation at x, with attaining decompositions."""

    kind: OperatorLatticeKind
    x: Element
    value: Element
    decompositions: int
    # target point -> carrier of y in an attaining decomposition x = y ⊔ z
    attained_by: Dict[Point, Tuple[Point, ...]] = field(default_factory=dict)

    def witness(self, t: Point) -> Tuple[Element, Element]:
        """The decomposition (y, z) attaining the value at target point t."""
        y = self.x.restrict(self.attained_by[t])
        return y, self.x - y


def _gray_sweep(deltas: List[Tuple[Fraction, ...]], start: Tuple[Fraction, ...], maximize: bool):
    """Extremum over all subsets A of start + sum_{i in A} deltas[i], per coordinate.

    Subsets are visited in Gray-code order so each step adds or removes one
    vector. Returns (extrema, masks attaining them).
    """
    n = len(deltas)
    current = list(start)
    best = list(start)
    best_mask = [0] * len(start)
    gray = 0
    for i in range(1, 1 << n):
        bit = (i & -i).bit_length() - 1
        gray ^= 1 << bit
        delta = deltas[bit]
        if gray >> bit & 1:
            for k, d in enumerate(delta):
                if d:
                    current[k] += d
        else:
            for k, d in enumerate(delta):
                if d:
                    current[k] -= d
        for k, v in enumerate(current):
            if (v > best[k]) if maximize else (v < best[k]):
                best[k] = v
                best_mask[k] = gray
    return best, best_mask


def oracle_search(kind: Union[OperatorLatticeKind, str], T: KernelOperator, S: Optional[KernelOperator],
                  x: Element, cap: int = DEFAULT_SUPPORT_CAP) -> OracleResult:
    """Enumerate all 2^|supp(x)| decompositions of x and take the exact sup or inf."""
    kind = OperatorLatticeKind.parse(kind)
    if kind in BINARY_KINDS:
        if S is None:
            raise StructuralError(f"{kind.value} needs a second operator")
        T._check(S)
    elif S is not None:
        raise StructuralError(f"{kind.value} takes a single operator")
    if x.space != T.source:
        raise StructuralError(f"Element lives on {x.space.label}, operator source is {T.source.label}")

    support = ordered_support(x)
    n = len(support)
    if n > cap:
        raise EnumerationCapError("decomposition support", n, cap)

    t_parts = single_point_contributions(T, x, support)
    zero = tuple(Fraction(0) for _ in T.target.points)

    def total(parts):
        acc = list(zero)
        for part in parts:
            for k, v in enumerate(part):
                acc[k] += v
        return tuple(acc)

    if kind in BINARY_KINDS:
        # Ty + Sz = S(x) + sum_{s in A} (T - S)(x_s 1_s)
        s_parts = single_point_contributions(S, x, support)
        deltas = [tuple(a - b for a, b in zip(tp, sp)) for tp, sp in zip(t_parts, s_parts)]
        best, masks = _gray_sweep(deltas, total(s_parts), maximize=kind is OperatorLatticeKind.JOIN)
    elif kind is OperatorLatticeKind.MODULUS:
        # Ty - Tz = -T(x) + sum_{s in A} 2 T(x_s 1_s)
        deltas = [tuple(2 * v for v in tp) for tp in t_parts]
        best, masks = _gray_sweep(deltas, tuple(-v for v in total(t_parts)), maximize=True)
    elif kind is OperatorLatticeKind.POS:
        best, masks = _gray_sweep(t_parts, zero, maximize=True)
    else:
        lowest, masks = _gray_sweep(t_parts, zero, maximize=False)
        best = [-v for v in lowest]

    attained = {
        t: tuple(support[i] for i in range(n) if masks[k] >> i & 1)
        for k, t in enumerate(T.target.points)
    }
    logger.debug(f"Oracle {kind.value} over {1 << n} decompositions at {x!r}")
    return OracleResult(kind=kind, x=x, value=Element(T.target, tuple(best)),
                        decompositions=1 << n, attained_by=attained)


def brute_lattice_op(kind: Union[OperatorLatticeKind, str], T: KernelOperator,
                     S: Optional[KernelOperator], x: Element,
                     cap: int = DEFAULT_SUPPORT_CAP) -> Element:
    """Value of T v S, T ^ S, T⁺, T⁻ or |T| at x by exhaustive decomposition."""
    return oracle_search(kind, T, S, x, cap).value


def decompositions(x: Element, cap: int = DEFAULT_SUPPORT_CAP) -> List[Tuple[Element, Element]]:
    """All pairs (y, z) with x = y ⊔ z, ordered by the bitmask of y over supp(x)."""
    support = ordered_support(x)
    if len(support) > cap:
        raise EnumerationCapError("decomposition support", len(support), cap)
    pairs = []
    for mask in range(1 << len(support)):
        y = x.restrict([p for i, p in enumerate(support) if mask >> i & 1])
        pairs.append((y, x - y))
    return pairs
