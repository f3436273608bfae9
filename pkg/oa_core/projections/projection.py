"""
Order projections on a finite space.

Every order projection 0 <= pi <= Id on Q^S is multiplication by the
indicator of a carrier A ⊆ S, so projections are stored as carriers and the
Boolean algebra B(E) is the powerset of the points.
"""

from dataclasses import dataclass
from typing import Iterable

from ..errors import StructuralError
from ..lattice import Element, Space


@dataclass(frozen=True)
class OrderProjection:
    """The order projection pi_A: multiplication by 1_A."""

    space: Space
    carrier: frozenset

    def __post_init__(self):
        carrier = frozenset(self.carrier)
        unknown = [p for p in carrier if p not in self.space]
        if unknown:
            raise StructuralError(f"Carrier points {sorted(map(repr, unknown))} are not in {self.space.label}")
        object.__setattr__(self, "carrier", carrier)

    @classmethod
    def of(cls, space: Space, points: Iterable) -> "OrderProjection":
        return cls(space, frozenset(points))

    @classmethod
    def identity(cls, space: Space) -> "OrderProjection":
        return cls(space, frozenset(space.points))

    @classmethod
    def zero(cls, space: Space) -> "OrderProjection":
        return cls(space, frozenset())

    def __call__(self, x: Element) -> Element:
        return apply_projection(self, x)

    def _check(self, other: "OrderProjection") -> None:
        if other.space != self.space:
            raise StructuralError(f"Projection space mismatch: {self.space.label} vs {other.space.label}")

    def meet(self, other: "OrderProjection") -> "OrderProjection":
        """pi ∧ rho = pi ∘ rho."""
        self._check(other)
        return OrderProjection(self.space, self.carrier & other.carrier)

    def join(self, other: "OrderProjection") -> "OrderProjection":
        """pi ∨ rho = pi + rho - pi ∘ rho."""
        self._check(other)
        return OrderProjection(self.space, self.carrier | other.carrier)

    def complement(self) -> "OrderProjection":
        """Id - pi."""
        return OrderProjection(self.space, frozenset(self.space.points) - self.carrier)

    def leq(self, other: "OrderProjection") -> bool:
        """pi <= rho iff pi ∘ rho = pi."""
        return self.meet(other) == self

    def sorted_carrier(self) -> list:
        return [p for p in self.space.points if p in self.carrier]


def apply_projection(p: OrderProjection, x: Element) -> Element:
    """x restricted to the carrier of p, zero elsewhere."""
    if x.space != p.space:
        raise StructuralError(f"Space mismatch: projection on {p.space.label}, element on {x.space.label}")
    return x.restrict(p.carrier)


def support_projection(x: Element) -> OrderProjection:
    """pi_x, the projection onto the band generated by x."""
    return OrderProjection(x.space, x.support)
