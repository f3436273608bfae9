"""
Sampled and exhaustive checks on operators.

Checks documented as reports never raise on a mathematical failure: the
report's ``passed`` flag is false and the witness is filled in.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from ..errors import StructuralError
from ..lattice import (
    DEFAULT_SUPPORT_CAP,
    Element,
    LatticeKind,
    Space,
    fragments,
    is_disjoint,
    lattice_op,
)
from ..utils.sampling import DEFAULT_GRID, random_disjoint_pair, sample_elements
from .kernel_operator import KernelOperator, eval_op
from .oracle import OperatorLatticeKind, brute_lattice_op

logger = logging.getLogger(__name__)

DEFAULT_RESOLUTION = 1000
DEFAULT_PRODUCT_GRID_CAP = 100000


@dataclass
class OACheckReport:
    """Outcome of testing T(y + z) = Ty + Tz on disjoint pairs."""

    passed: bool
    structural: bool
    checked_pairs: int
    witness: Optional[Dict[str, Element]] = None


def check_oa(T: Callable[[Element], Element], space: Optional[Space] = None, samples: int = 50,
             rng: Optional[random.Random] = None) -> OACheckReport:
    """Test orthogonal additivity of a black-box map.

    Kernel-form operators pass structurally. Other maps are tried on the
    pair y = z = 0, then on pairs of distinct unit vectors, then on random
    disjoint pairs.
    """
    if isinstance(T, KernelOperator):
        return OACheckReport(passed=True, structural=True, checked_pairs=0)
    if space is None:
        raise StructuralError("A black-box map needs its source space")

    rng = rng or random.Random(0)
    zero = space.zero()
    pairs: List[Tuple[Element, Element]] = [(zero, zero)]
    points = list(space.points)
    for a in points:
        for b in points:
            if a != b and len(pairs) < samples:
                pairs.append((space.unit(a), space.unit(b)))
    while len(pairs) < samples:
        pairs.append(random_disjoint_pair(rng, space))

    for y, z in pairs:
        left = T(y + z)
        right = T(y) + T(z)
        if left != right:
            logger.info(f"Orthogonal additivity fails at y={y!r}, z={z!r}")
            return OACheckReport(passed=False, structural=False, checked_pairs=len(pairs),
                                 witness={"y": y, "z": z, "left": left, "right": right})
    logger.info(f"Orthogonal additivity holds on {len(pairs)} disjoint pairs")
    return OACheckReport(passed=True, structural=False, checked_pairs=len(pairs))


def _axis_values(bound: Fraction, resolution: int) -> List[Fraction]:
    """±bound·k/resolution for k = resolution..1: largest magnitude first, positive before negative."""
    values = []
    for k in range(resolution, 0, -1):
        v = bound * k / resolution
        values.append(v)
        values.append(-v)
    return values


def order_bound_witness(T: KernelOperator, bound_box: Element, M, resolution: int = DEFAULT_RESOLUTION,
                        product_grid_cap: int = DEFAULT_PRODUCT_GRID_CAP) -> Optional[Element]:
    """Search [-box, box] for x with |Tx|_t >= M at some t.

    The comparison is inclusive: a value equal to M counts, so the diagonal
    kernel r with box 1 already reaches M = 1.

    Single-coordinate elements are tried first, then the full product grid
    when its size stays within ``product_grid_cap``. Returns None when no
    grid point reaches M.
    """
    M = Fraction(M)
    if bound_box.space != T.source:
        raise StructuralError("Bound box does not live on the operator source")
    if any(v < 0 for v in bound_box.values):
        raise StructuralError("Bound box must be nonnegative")

    def reaches(x: Element) -> bool:
        return any(abs(v) >= M for v in eval_op(T, x).values)

    space = T.source
    axes = {p: _axis_values(bound_box[p], resolution) for p in space.points if bound_box[p] > 0}
    for p, values in axes.items():
        for v in values:
            x = space.unit(p, v)
            if reaches(x):
                logger.info(f"Order bound {M} reached at {x!r}")
                return x

    if len(axes) < 2:
        return None
    size = 1
    for values in axes.values():
        size *= len(values) + 1
    if size > product_grid_cap:
        logger.info(f"Product grid of size {size} exceeds cap {product_grid_cap}; single axes only")
        return None
    keys = list(axes)
    for combo in product(*[axes[p] + [Fraction(0)] for p in keys]):
        x = space.element(dict(zip(keys, combo)))
        if reaches(x):
            logger.info(f"Order bound {M} reached at {x!r}")
            return x
    return None


@dataclass
class PositivityReport:
    """Grid semi-decision of T >= 0: a failure is definitive, a pass means "positive on grid"."""

    positive: bool
    grid_size: int
    witness: Optional[Dict[str, Any]] = None


def is_positive_on_grid(T: KernelOperator, grid: Iterable[Fraction] = DEFAULT_GRID) -> PositivityReport:
    """T x >= 0 for every x iff every kernel entry is nonnegative; checked on the grid."""
    grid = tuple(grid)
    for s, t, e in T.entries:
        for r in grid:
            value = e.evaluate(r)
            if value < 0:
                witness = {"source": s, "target": t, "r": r, "value": value,
                           "element": T.source.unit(s, r)}
                return PositivityReport(positive=False, grid_size=len(grid), witness=witness)
    return PositivityReport(positive=True, grid_size=len(grid))


def lateral_bound(T: KernelOperator, x: Element, cap: int = DEFAULT_SUPPORT_CAP) -> Element:
    """Coordinatewise sup of |Ty| over the fragments y of x."""
    bound = T.target.zero()
    for y in fragments(x, cap):
        bound = lattice_op(LatticeKind.JOIN, bound, lattice_op(LatticeKind.ABS, eval_op(T, y)))
    return bound


@dataclass
class DisjointnessReport:
    passed: bool
    checked_pairs: int
    witness: Optional[Dict[str, Element]] = None


def is_disjointness_preserving(T: Callable[[Element], Element],
                               pairs: Iterable[Tuple[Element, Element]]) -> DisjointnessReport:
    """x ⊥ y implies Tx ⊥ Ty on the given pairs; non-disjoint pairs are skipped."""
    checked = 0
    for x, y in pairs:
        if not is_disjoint(x, y):
            continue
        checked += 1
        tx, ty = T(x), T(y)
        if not is_disjoint(tx, ty):
            return DisjointnessReport(passed=False, checked_pairs=checked,
                                      witness={"x": x, "y": y, "Tx": tx, "Ty": ty})
    return DisjointnessReport(passed=True, checked_pairs=checked)


@dataclass
class RegularDecompositionReport:
    """Tx = T⁺x - T⁻x and |T|x = T⁺x + T⁻x, evaluated by the oracle."""

    x: Element
    value: Element
    positive_part: Element
    negative_part: Element
    modulus: Element
    passed: bool
    failures: List[str] = field(default_factory=list)


def regular_decomposition_check(T: KernelOperator, x: Element,
                                cap: int = DEFAULT_SUPPORT_CAP) -> RegularDecompositionReport:
    value = eval_op(T, x)
    pos = brute_lattice_op(OperatorLatticeKind.POS, T, None, x, cap)
    neg = brute_lattice_op(OperatorLatticeKind.NEG, T, None, x, cap)
    mod = brute_lattice_op(OperatorLatticeKind.MODULUS, T, None, x, cap)
    failures = []
    if value != pos - neg:
        failures.append("Tx != T⁺x - T⁻x")
    if mod != pos + neg:
        failures.append("|T|x != T⁺x + T⁻x")
    if not lattice_op(LatticeKind.ABS, value).leq(mod):
        failures.append("|Tx| is not dominated by |T|x")
    return RegularDecompositionReport(x=x, value=value, positive_part=pos, negative_part=neg,
                                      modulus=mod, passed=not failures, failures=failures)


def sample_disjoint_pairs(space: Space, count: int, rng: random.Random) -> List[Tuple[Element, Element]]:
    return [random_disjoint_pair(rng, space) for _ in range(count)]


def seed_elements(space: Space) -> List[Element]:
    """Zero, the unit vectors and the constant 1: the first elements every sampled check tries."""
    return [space.zero()] + [space.unit(p) for p in space.points] + [space.constant(1)]


def elements_for(space: Space, count: int, rng: random.Random, nonnegative: bool = False) -> List[Element]:
    return sample_elements(rng, space, count, seeds=seed_elements(space), nonnegative=nonnegative)
