"""
Orthogonally additive operators in kernel form.

An operator T: Q^S -> Q^T is stored as a sparse table of kernel expressions
g[s][t] and acts by (Tx)_t = sum_s g[s][t](x_s). Every kernel vanishes at 0,
which gives T(0) = 0 and orthogonal additivity by construction.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import KernelEvaluationError, StructuralError
from ..kernel_lang import ZERO, KernelExpr, is_zero_literal, minus, negate, parse, plus, scaled
from ..lattice import Element, Point, Space
from ..utils.sampling import DEFAULT_GRID

logger = logging.getLogger(__name__)

Entry = Tuple[Point, Point, KernelExpr]
ExprLike = Union[str, KernelExpr]


def as_expr(value: ExprLike) -> KernelExpr:
    if isinstance(value, KernelExpr):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return parse(str(value))
    if isinstance(value, str):
        return parse(value)
    raise StructuralError(f"Expected a kernel expression, got {type(value).__name__} {value!r}")


def check_normalized(expr: KernelExpr, where: str = "") -> None:
    """Raise unless expr(0) = 0."""
    try:
        at_zero = expr(0)
    except KernelEvaluationError as e:
        raise StructuralError(f"Kernel {where}{expr} cannot be evaluated at 0: {e}") from e
    if at_zero != 0:
        raise StructuralError(f"Kernel {where}{expr} is not normalised: value {at_zero} at r = 0")


@dataclass(frozen=True)
class KernelOperator:
    """T with (Tx)_t = sum_s kernel[s][t](x_s)."""

    source: Space
    target: Space
    entries: Tuple[Entry, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        merged: Dict[Tuple[Point, Point], KernelExpr] = {}
        for s, t, expr in self.entries:
            if s not in self.source:
                raise StructuralError(f"Kernel names unknown source point {s!r}")
            if t not in self.target:
                raise StructuralError(f"Kernel names unknown target point {t!r}")
            expr = as_expr(expr)
            if (s, t) in merged:
                raise StructuralError(f"Duplicate kernel entry for ({s!r}, {t!r})")
            check_normalized(expr, f"[{s!r}][{t!r}] ")
            if not is_zero_literal(expr):
                merged[s, t] = expr
        src, tgt = self.source, self.target
        ordered = sorted(merged.items(), key=lambda kv: (src.index(kv[0][0]), tgt.index(kv[0][1])))
        object.__setattr__(self, "entries", tuple((s, t, e) for (s, t), e in ordered))

    @classmethod
    def from_table(cls, source: Space, target: Space,
                   table: Mapping[Point, Mapping[Point, ExprLike]], name: str = "") -> "KernelOperator":
        """Build from a nested mapping source point -> target point -> expression."""
        entries = [(s, t, as_expr(e)) for s, row in table.items() for t, e in row.items()]
        return cls(source, target, tuple(entries), name)

    @cached_property
    def kernel(self) -> Dict[Tuple[Point, Point], KernelExpr]:
        return {(s, t): e for s, t, e in self.entries}

    def entry(self, s: Point, t: Point) -> KernelExpr:
        return self.kernel.get((s, t), ZERO)

    def columns(self) -> Dict[Point, List[Tuple[Point, KernelExpr]]]:
        """Target point -> nonzero (source point, expression) pairs."""
        cols: Dict[Point, List[Tuple[Point, KernelExpr]]] = {t: [] for t in self.target.points}
        for s, t, e in self.entries:
            cols[t].append((s, e))
        return cols

    def to_table(self) -> Dict[Point, Dict[Point, str]]:
        table: Dict[Point, Dict[Point, str]] = {}
        for s, t, e in self.entries:
            table.setdefault(s, {})[t] = e.to_text()
        return table

    def is_structurally_zero(self) -> bool:
        return not self.entries

    def __call__(self, x: Element) -> Element:
        return eval_op(self, x)

    def _check(self, other: "KernelOperator") -> None:
        if other.source != self.source or other.target != self.target:
            raise StructuralError("Operators act between different spaces")

    def _combine(self, other: "KernelOperator", op) -> "KernelOperator":
        self._check(other)
        a, b = self.kernel, other.kernel
        keys = set(a) | set(b)
        return KernelOperator(self.source, self.target,
                              tuple((s, t, op(a.get((s, t), ZERO), b.get((s, t), ZERO))) for s, t in keys))

    def __add__(self, other: "KernelOperator") -> "KernelOperator":
        return self._combine(other, plus)

    def __sub__(self, other: "KernelOperator") -> "KernelOperator":
        return self._combine(other, minus)

    def __neg__(self) -> "KernelOperator":
        return KernelOperator(self.source, self.target, tuple((s, t, negate(e)) for s, t, e in self.entries))

    def scale(self, c: Any) -> "KernelOperator":
        return KernelOperator(self.source, self.target, tuple((s, t, scaled(c, e)) for s, t, e in self.entries))

    def restrict_entries(self, keep) -> "KernelOperator":
        """Operator keeping only the entries (s, t) for which keep(s, t) holds."""
        return KernelOperator(self.source, self.target,
                              tuple((s, t, e) for s, t, e in self.entries if keep(s, t)))


def eval_op(T: KernelOperator, x: Element) -> Element:
    """(Tx)_t = sum_s kernel[s][t](x_s), exactly."""
    if x.space != T.source:
        raise StructuralError(f"Element lives on {x.space.label}, operator source is {T.source.label}")
    out = [Fraction(0)] * len(T.target)
    for s, t, e in T.entries:
        value = x[s]
        if value:
            out[T.target.index(t)] += e.evaluate(value)
    return Element(T.target, tuple(out))


def single_point_contributions(T: KernelOperator, x: Element,
                               points: Sequence[Point]) -> List[Tuple[Fraction, ...]]:
    """T(x_s 1_{s}) for each given source point s, as value tuples over the target."""
    result = []
    rows: Dict[Point, List[Tuple[Point, KernelExpr]]] = {}
    for s, t, e in T.entries:
        rows.setdefault(s, []).append((t, e))
    for s in points:
        out = [Fraction(0)] * len(T.target)
        value = x[s]
        if value:
            for t, e in rows.get(s, ()):
                out[T.target.index(t)] += e.evaluate(value)
        result.append(tuple(out))
    return result


def diagonal_operator(space: Space, expr: Union[ExprLike, Mapping[Point, ExprLike]],
                      name: str = "") -> KernelOperator:
    """kernel[s][s] = expr (or expr[s]); all off-diagonal entries vanish."""
    if isinstance(expr, Mapping):
        entries = tuple((s, s, as_expr(expr[s])) for s in space.points if s in expr)
    else:
        e = as_expr(expr)
        entries = tuple((s, s, e) for s in space.points)
    return KernelOperator(space, space, entries, name)


def zero_operator(source: Space, target: Optional[Space] = None) -> KernelOperator:
    return KernelOperator(source, target or source, ())


def first_difference_on_grid(T: KernelOperator, S: KernelOperator,
                             grid: Iterable[Fraction] = DEFAULT_GRID) -> Optional[Dict[str, Any]]:
    """First (s, t, r) at which the kernels of T and S differ, or None."""
    T._check(S)
    a, b = T.kernel, S.kernel
    grid = tuple(grid)
    for s in T.source.points:
        for t in T.target.points:
            ea, eb = a.get((s, t), ZERO), b.get((s, t), ZERO)
            if ea == eb:
                continue
            for r in grid:
                va, vb = ea.evaluate(r), eb.evaluate(r)
                if va != vb:
                    return {"source": s, "target": t, "r": r, "left": va, "right": vb}
    return None


def equal_on_grid(T: KernelOperator, S: KernelOperator, grid: Iterable[Fraction] = DEFAULT_GRID) -> bool:
    """Kernel comparison on the sampling grid; both kernels vanish at 0 structurally."""
    return first_difference_on_grid(T, S, grid) is None


def vanishes_on_grid(expr: KernelExpr, grid: Iterable[Fraction] = DEFAULT_GRID) -> Optional[Fraction]:
    """None when expr is 0 at every grid point, else the first r where it is not."""
    if is_zero_literal(expr):
        return None
    for r in grid:
        if expr.evaluate(r) != 0:
            return r
    return None
