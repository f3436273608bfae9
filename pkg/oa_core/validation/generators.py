"""
Random homomorphisms, operators, kernels and ideals for property suites.
"""

import random
from typing import Optional

from ..kernel_lang import ZERO
from ..lateral import LateralIdeal
from ..lattice import Space
from ..operators import KernelOperator
from ..projections import BooleanHom
from ..superposition import SuperpositionKernel
from ..utils.sampling import (
    random_element,
    random_kernel_expr,
    random_point_map,
    random_positive_kernel_expr,
)


def random_hom(rng: random.Random, source: Space, target: Optional[Space] = None,
               bijective: bool = False) -> BooleanHom:
    target = target or source
    if bijective:
        if len(source) != len(target):
            raise ValueError("A bijective point map needs spaces of equal size")
        images = list(source.points)
        rng.shuffle(images)
        return BooleanHom.from_mapping(source, target, dict(zip(target.points, images)))
    return BooleanHom.from_mapping(source, target, random_point_map(rng, source, target))


def random_atomic_operator(rng: random.Random, h: BooleanHom, positive: bool = False,
                           density: float = 0.85, depth: int = 2) -> KernelOperator:
    """Entries only on the graph of phi, so the operator is atomic subordinate to h."""
    make = random_positive_kernel_expr if positive else random_kernel_expr
    entries = []
    for t in h.target_space.points:
        if rng.random() < density:
            entries.append((h.phi(t), t, make(rng, depth)))
    return KernelOperator(h.source_space, h.target_space, tuple(entries))


def random_operator(rng: random.Random, source: Space, target: Optional[Space] = None,
                    positive: bool = False, density: float = 0.4, depth: int = 2) -> KernelOperator:
    """Entries scattered over the whole kernel table."""
    target = target or source
    make = random_positive_kernel_expr if positive else random_kernel_expr
    entries = [(s, t, make(rng, depth)) for s in source.points for t in target.points if rng.random() < density]
    return KernelOperator(source, target, tuple(entries))


def random_superposition_kernel(rng: random.Random, space: Space, depth: int = 2) -> SuperpositionKernel:
    exprs = tuple(random_kernel_expr(rng, depth) if rng.random() < 0.9 else ZERO for _ in space.points)
    return SuperpositionKernel(space, exprs)


def random_ideal(rng: random.Random, space: Space, kind: str) -> LateralIdeal:
    """A random lateral ideal of the given kind; the explicit kind gives the empty ideal."""
    if kind == "order_ideal":
        return LateralIdeal.order_ideal(space, [random_element(rng, space, density=0.6)], check=False)
    if kind == "fragment_set":
        return LateralIdeal.fragment_set(random_element(rng, space), check=False)
    if kind == "operator_kernel":
        # ker of a positive diagonal operator with some columns identically zero
        entries = [(s, s, random_positive_kernel_expr(rng, 1)) for s in space.points if rng.random() < 0.5]
        return LateralIdeal.operator_kernel(KernelOperator(space, space, tuple(entries)), check=False)
    if kind == "explicit":
        return LateralIdeal.explicit(space, [], check=False)
    raise ValueError(f"Unknown ideal kind {kind!r}")


__all__ = [
    "random_atomic_operator",
    "random_hom",
    "random_ideal",
    "random_operator",
    "random_superposition_kernel",
]
