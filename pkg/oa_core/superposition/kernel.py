"""
Superposition (Nemytskii) kernels.

A kernel N assigns to every point s an expression N(s, ·) with N(s, 0) = 0;
the superposition operator acts by (T_N f)(s) = N(s, f(s)).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from ..errors import KernelEvaluationError, StructuralError
from ..kernel_lang import ZERO, KernelExpr
from ..lattice import Element, Point, Space
from ..operators import KernelOperator, as_expr, check_normalized, diagonal_operator
from ..operators.kernel_operator import ExprLike
from ..utils.sampling import DEFAULT_GRID

logger = logging.getLogger(__name__)

DEFAULT_CONTINUITY_TOLERANCE = Fraction(1)


@dataclass
class KernelConditionsReport:
    """N(s, 0) = 0 exactly, and the largest jump of N(s, ·) between grid neighbours."""

    vanishes_at_zero: bool
    max_jumps: Dict[Point, Fraction]
    flagged: List[Point] = field(default_factory=list)
    undefined: Dict[Point, Fraction] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.vanishes_at_zero and not self.flagged and not self.undefined


@dataclass(frozen=True)
class SuperpositionKernel:
    space: Space
    expressions: Tuple[KernelExpr, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        expressions = tuple(as_expr(e) for e in self.expressions)
        if len(expressions) != len(self.space):
            raise StructuralError(
                f"Kernel has {len(expressions)} expressions for {len(self.space)} points"
            )
        for p, e in zip(self.space.points, expressions):
            check_normalized(e, f"N({p!r}, ·) ")
        object.__setattr__(self, "expressions", expressions)

    @classmethod
    def from_mapping(cls, space: Space, expressions: Mapping[Point, ExprLike], name: str = "") -> "SuperpositionKernel":
        """Points missing from the mapping get the zero kernel."""
        unknown = [p for p in expressions if p not in space]
        if unknown:
            raise StructuralError(f"Kernel names unknown points {unknown!r}")
        return cls(space, tuple(as_expr(expressions.get(p, ZERO)) for p in space.points), name)

    @classmethod
    def uniform(cls, space: Space, expr: ExprLike, name: str = "") -> "SuperpositionKernel":
        e = as_expr(expr)
        return cls(space, (e,) * len(space), name)

    def expr(self, point: Point) -> KernelExpr:
        return self.expressions[self.space.index(point)]

    def __call__(self, f: Element) -> Element:
        return superpose(self, f)

    def as_operator(self) -> KernelOperator:
        """T_N as a diagonal kernel operator."""
        return diagonal_operator(self.space, dict(zip(self.space.points, self.expressions)), self.name)

    def to_table(self) -> Dict[Point, str]:
        return {p: e.to_text() for p, e in zip(self.space.points, self.expressions)}

    def check_conditions(self, grid: Sequence[Fraction] = DEFAULT_GRID,
                         tolerance: Fraction = DEFAULT_CONTINUITY_TOLERANCE) -> KernelConditionsReport:
        """Exact zero at zero and a sampled continuity check on the grid.

        A jump above ``tolerance`` between neighbouring grid points flags the
        point as possibly discontinuous; this is a report, not a proof.
        """
        grid = sorted(set(grid) | {Fraction(0)})
        vanishes = all(e(0) == 0 for e in self.expressions)
        max_jumps: Dict[Point, Fraction] = {}
        flagged: List[Point] = []
        undefined: Dict[Point, Fraction] = {}
        for p, e in zip(self.space.points, self.expressions):
            previous: Optional[Fraction] = None
            jump = Fraction(0)
            for r in grid:
                try:
                    value = e.evaluate(r)
                except KernelEvaluationError:
                    undefined[p] = r
                    break
                if previous is not None:
                    jump = max(jump, abs(value - previous))
                previous = value
            max_jumps[p] = jump
            if jump > tolerance:
                flagged.append(p)
        logger.info(f"Kernel conditions: zero at zero {vanishes}, {len(flagged)} points flagged")
        return KernelConditionsReport(vanishes_at_zero=vanishes, max_jumps=max_jumps,
                                      flagged=flagged, undefined=undefined)


def superpose(K: SuperpositionKernel, f: Element) -> Element:
    """(T_N f)(s) = N(s, f(s))."""
    if f.space != K.space:
        raise StructuralError(f"Element lives on {f.space.label}, kernel on {K.space.label}")
    return Element(K.space, tuple(e.evaluate(v) if v else Fraction(0)
                                  for e, v in zip(K.expressions, f.values)))
