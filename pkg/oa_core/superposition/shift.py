"""
Shift operators induced by Boolean homomorphisms.

On simple functions S_Phi(sum r_i 1_{A_i}) = sum r_i 1_{Phi(A_i)}. Every
element of a finite model is simple, so with Phi(A) = phi⁻¹(A) the shift
reads (S_Phi f)(t) = f(phi(t)).
"""

from dataclasses import dataclass

from ..errors import StructuralError
from ..kernel_lang import R
from ..lattice import Element
from ..operators import KernelOperator
from ..projections import BooleanHom


@dataclass(frozen=True)
class ShiftOperator:
    hom: BooleanHom

    def __call__(self, f: Element) -> Element:
        return shift_apply(self, f)

    def is_invertible(self) -> bool:
        return self.hom.is_isomorphism()

    def inverse(self) -> "ShiftOperator":
        """S_Phi⁻¹ = S_{Phi⁻¹}; HomomorphismError unless phi is a bijection."""
        return ShiftOperator(self.hom.inverse())

    def as_operator(self) -> KernelOperator:
        """The linear kernel operator with entry r at (phi(t), t)."""
        h = self.hom
        return KernelOperator(h.source_space, h.target_space,
                              tuple((s, t, R) for t, s in zip(h.target_space.points, h.point_map)))


def shift_apply(S: ShiftOperator, f: Element) -> Element:
    """(S_Phi f)(t) = f(phi(t))."""
    h = S.hom
    if f.space != h.source_space:
        raise StructuralError(f"Element lives on {f.space.label}, shift source is {h.source_space.label}")
    return Element(h.target_space, tuple(f[s] for s in h.point_map))
