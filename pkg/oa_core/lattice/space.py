"""
Finite vector-lattice model E = Q^S.

A ``Space`` is a finite point set carrying two strictly positive measures
(the weight nu and an equivalent finite weight lambda). An ``Element`` is an
exact-rational vector indexed by the points of a space; all lattice
operations act coordinatewise.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Hashable, Iterable, Mapping, Optional, Sequence, Tuple, Union

from ..errors import StructuralError
from ..utils.rationals import format_rational, to_rational

logger = logging.getLogger(__name__)

Point = Hashable
_ZERO = Fraction(0)
Values = Union[Sequence[Any], Mapping[Point, Any]]


@dataclass(frozen=True)
class Space:
    """Finite measure space (B, Xi, nu) with an equivalent finite measure lambda."""

    points: Tuple[Point, ...]
    weight: Tuple[Fraction, ...] = ()
    finite_weight: Tuple[Fraction, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        points = tuple(self.points)
        if not points:
            raise StructuralError("A space needs at least one point")
        if len(set(points)) != len(points):
            raise StructuralError(f"Duplicate point identifiers in space {self.name or points}")
        weight = tuple(to_rational(w) for w in self.weight) or (Fraction(1),) * len(points)
        finite_weight = tuple(to_rational(w) for w in self.finite_weight) or weight
        for label, ws in (("weight", weight), ("finite_weight", finite_weight)):
            if len(ws) != len(points):
                raise StructuralError(f"{label} has {len(ws)} entries for {len(points)} points")
            if any(w <= 0 for w in ws):
                raise StructuralError(f"All {label} entries must be strictly positive")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "finite_weight", finite_weight)

    @classmethod
    def of(cls, points: Iterable[Point], weight: Optional[Mapping[Point, Any]] = None,
           finite_weight: Optional[Mapping[Point, Any]] = None, name: str = "") -> "Space":
        """Build a space from a point list and optional point -> weight mappings."""
        points = tuple(points)
        w = tuple(weight[p] for p in points) if weight else ()
        fw = tuple(finite_weight[p] for p in points) if finite_weight else ()
        return cls(points, w, fw, name)

    @classmethod
    def range(cls, n: int, name: str = "") -> "Space":
        """The space {0, ..., n-1} with unit weights."""
        return cls(tuple(range(n)), name=name)

    @cached_property
    def _index(self) -> Dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, point: Point) -> bool:
        return point in self._index

    def index(self, point: Point) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise StructuralError(f"Unknown point {point!r} in space {self.label}") from None

    @property
    def label(self) -> str:
        return self.name or repr(list(self.points))

    def zero(self) -> "Element":
        return Element(self, (Fraction(0),) * len(self.points))

    def constant(self, r: Any) -> "Element":
        """The element r * 1."""
        return Element(self, (to_rational(r),) * len(self.points))

    def unit(self, point: Point, r: Any = 1) -> "Element":
        """The element r * 1_{point}."""
        i = self.index(point)
        values = [Fraction(0)] * len(self.points)
        values[i] = to_rational(r)
        return Element(self, tuple(values))

    def element(self, values: Values) -> "Element":
        """Build an element from a value list (in point order) or a point mapping."""
        if isinstance(values, Mapping):
            unknown = [p for p in values if p not in self]
            if unknown:
                raise StructuralError(f"Unknown points {unknown!r} in space {self.label}")
            return Element(self, tuple(to_rational(values.get(p, 0)) for p in self.points))
        values = list(values)
        if len(values) != len(self.points):
            raise StructuralError(
                f"Element has {len(values)} values but space {self.label} has {len(self.points)} points"
            )
        return Element(self, tuple(to_rational(v) for v in values))


@dataclass(frozen=True)
class Element:
    """An exact-rational vector f in L0 of a finite space."""

    space: Space
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(self.space.points):
            raise StructuralError("Element values must cover every point of the space")

    def __getitem__(self, point: Point) -> Fraction:
        return self.values[self.space.index(point)]

    def __iter__(self):
        return iter(self.values)

    def items(self):
        return zip(self.space.points, self.values)

    def as_dict(self) -> Dict[Point, Fraction]:
        return dict(self.items())

    @property
    def support(self) -> frozenset:
        return frozenset(p for p, v in self.items() if v != 0)

    def is_zero(self) -> bool:
        return not any(self.values)

    def restrict(self, points: Iterable[Point]) -> "Element":
        """x restricted to a point set, zero elsewhere."""
        keep = set(points)
        return Element(self.space, tuple(v if p in keep else Fraction(0) for p, v in self.items()))

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise StructuralError(f"Expected an Element, got {type(other).__name__}")
        if other.space is not self.space and other.space != self.space:
            raise StructuralError(
                f"Space mismatch: {self.space.label} vs {other.space.label}"
            )

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.space, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.space, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Element":
        return Element(self.space, tuple(-a for a in self.values))

    def __mul__(self, scalar: Any) -> "Element":
        c = to_rational(scalar)
        return Element(self.space, tuple(c * a for a in self.values))

    __rmul__ = __mul__

    def leq(self, other: "Element") -> bool:
        """Coordinatewise order x <= y."""
        self._check(other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def to_list(self) -> list:
        return [format_rational(v) for v in self.values]

    def __repr__(self) -> str:
        return f"Element({self.space.label}, [{', '.join(self.to_list())}])"


class LatticeKind(str, Enum):
    """Lattice operations on elements."""

    JOIN = "join"
    MEET = "meet"
    ABS = "abs"
    POS = "pos"
    NEG = "neg"


_UNARY = {LatticeKind.ABS, LatticeKind.POS, LatticeKind.NEG}


def lattice_op(kind: Union[LatticeKind, str], x: Element, y: Optional[Element] = None) -> Element:
    """Coordinatewise join, meet, modulus, positive part or negative part."""
    kind = LatticeKind(kind)
    if kind in _UNARY:
        if y is not None:
            raise StructuralError(f"{kind.value} takes a single element")
        if kind is LatticeKind.ABS:
            return Element(x.space, tuple(abs(a) for a in x.values))
        if kind is LatticeKind.POS:
            return Element(x.space, tuple(max(a, _ZERO) for a in x.values))
        return Element(x.space, tuple(max(-a, _ZERO) for a in x.values))

    if y is None:
        raise StructuralError(f"{kind.value} needs two elements")
    x._check(y)
    pick = max if kind is LatticeKind.JOIN else min
    return Element(x.space, tuple(pick(a, b) for a, b in zip(x.values, y.values)))


def join(x: Element, y: Element) -> Element:
    return lattice_op(LatticeKind.JOIN, x, y)


def meet(x: Element, y: Element) -> Element:
    return lattice_op(LatticeKind.MEET, x, y)


def is_disjoint(x: Element, y: Element) -> bool:
    """x is disjoint from y iff |x| meet |y| = 0, i.e. their supports do not meet."""
    x._check(y)
    return all(a == 0 or b == 0 for a, b in zip(x.values, y.values))
