"""
Atomicity of kernel operators.

T is atomic subordinate to a Boolean homomorphism Phi when T∘pi = Phi(pi)∘T
for every order projection pi. With Phi given by the point map phi, a kernel
operator is atomic exactly when kernel[s][t] vanishes whenever s != phi(t).
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import EnumerationCapError, StructuralError
from ..lattice import DEFAULT_SUPPORT_CAP, Element, Point, fragments, is_fragment
from ..operators import (
    KernelOperator,
    elements_for,
    eval_op,
    is_disjointness_preserving,
    vanishes_on_grid,
)
from ..projections import DEFAULT_FULL_CAP, BooleanHom, all_subsets, hom_apply
from ..utils.sampling import DEFAULT_GRID

logger = logging.getLogger(__name__)


class AtomicityMode(str, Enum):
    SINGLETON = "singleton"
    FULL = "full"


@dataclass
class AtomicityWitness:
    """T(pi_A x) != Phi(pi_A)(T x)."""

    carrier: Tuple[Point, ...]
    element: Element
    left: Element
    right: Element

    def to_dict(self) -> Dict[str, Any]:
        return {
            "carrier": list(self.carrier),
            "element": self.element.to_list(),
            "left": self.left.to_list(),
            "right": self.right.to_list(),
        }


@dataclass
class AtomicityReport:
    verdict: bool
    mode: AtomicityMode
    checked: int = 0
    witnesses: List[AtomicityWitness] = field(default_factory=list)


def check_hom_spaces(T: KernelOperator, h: BooleanHom) -> None:
    if h.source_space != T.source or h.target_space != T.target:
        raise StructuralError(
            "Homomorphism must map B(operator source) to B(operator target): "
            f"hom {h.source_space.label} -> {h.target_space.label}, "
            f"operator {T.source.label} -> {T.target.label}"
        )


def _witness(T: KernelOperator, h: BooleanHom, carrier: Iterable[Point], x: Element) -> AtomicityWitness:
    carrier = tuple(p for p in T.source.points if p in set(carrier))
    left = eval_op(T, x.restrict(carrier))
    right = eval_op(T, x).restrict(hom_apply(h, carrier))
    return AtomicityWitness(carrier=carrier, element=x, left=left, right=right)


def is_atomic(T: KernelOperator, h: BooleanHom, mode: Union[AtomicityMode, str] = AtomicityMode.SINGLETON,
              grid: Sequence[Fraction] = DEFAULT_GRID, full_cap: int = DEFAULT_FULL_CAP,
              samples: int = 20, rng: Optional[random.Random] = None) -> AtomicityReport:
    """Decide T∘pi = Phi(pi)∘T.

    singleton: every entry kernel[s][t] with s != phi(t) must vanish on the
    grid; a surviving entry yields the witness pi = pi_{s}, x = r·1_{s}.
    full: every carrier A of the source (at most ``full_cap`` points) is
    tested on single-point elements over the grid and on sampled elements.
    """
    mode = AtomicityMode(mode)
    check_hom_spaces(T, h)
    grid = tuple(grid)
    if mode is AtomicityMode.SINGLETON:
        return _singleton_check(T, h, grid)
    return _full_check(T, h, grid, full_cap, samples, rng or random.Random(0))


def _singleton_check(T: KernelOperator, h: BooleanHom, grid: Tuple[Fraction, ...]) -> AtomicityReport:
    witnesses = []
    checked = 0
    probe = (Fraction(1),) + grid
    for s, t, e in T.entries:
        checked += 1
        if h.phi(t) == s:
            continue
        r = vanishes_on_grid(e, probe)
        if r is not None:
            witnesses.append(_witness(T, h, [s], T.source.unit(s, r)))
    verdict = not witnesses
    logger.info(f"Singleton atomicity check of {checked} kernel entries: {'atomic' if verdict else 'not atomic'}")
    return AtomicityReport(verdict=verdict, mode=AtomicityMode.SINGLETON, checked=checked, witnesses=witnesses)


def _full_check(T: KernelOperator, h: BooleanHom, grid: Tuple[Fraction, ...], full_cap: int,
                samples: int, rng: random.Random) -> AtomicityReport:
    source = T.source
    if len(source) > full_cap:
        raise EnumerationCapError("full-mode projection algebra", len(source), full_cap)

    cache: Dict[Element, Element] = {}

    def apply(x: Element) -> Element:
        if x not in cache:
            cache[x] = eval_op(T, x)
        return cache[x]

    tests = [source.unit(s, r) for s in source.points for r in grid if r != 0]
    tests += elements_for(source, samples, rng)
    witnesses = []
    checked = 0
    for carrier in all_subsets(source.points):
        image = hom_apply(h, carrier)
        for x in tests:
            checked += 1
            if apply(x.restrict(carrier)) != apply(x).restrict(image):
                witnesses.append(_witness(T, h, carrier, x))
                break
        if len(witnesses) >= 10:
            break
    verdict = not witnesses
    logger.info(f"Full atomicity check over {checked} carrier/element pairs: "
                f"{'atomic' if verdict else 'not atomic'}")
    return AtomicityReport(verdict=verdict, mode=AtomicityMode.FULL, checked=checked, witnesses=witnesses)


def subordinate_hom(T: KernelOperator, S: Optional[KernelOperator] = None,
                    grid: Sequence[Fraction] = DEFAULT_GRID) -> Optional[BooleanHom]:
    """A point map phi making T (and S) atomic, or None when none exists.

    Each target column may carry at most one source whose kernel does not
    vanish on the grid; columns without one are sent to the first source point.
    """
    operators = [T] if S is None else [T, S]
    if S is not None:
        T._check(S)
    grid = tuple(grid)
    columns = [op.columns() for op in operators]
    mapping: Dict[Point, Point] = {}
    for t in T.target.points:
        live = set()
        for cols in columns:
            for s, e in cols[t]:
                if vanishes_on_grid(e, grid) is not None:
                    live.add(s)
        if len(live) > 1:
            return None
        mapping[t] = live.pop() if live else T.source.points[0]
    return BooleanHom.from_mapping(T.source, T.target, mapping, name="subordinate")


@dataclass
class IdealPropertyReport:
    """0 <= S <= T with T atomic should force S atomic."""

    hypothesis_holds: bool
    t_atomic: bool
    s_atomic: bool
    checked: int
    passed: bool
    witness: Optional[Dict[str, Any]] = None


def ideal_property_check(T: KernelOperator, S: KernelOperator, h: BooleanHom, samples: int = 50,
                         rng: Optional[random.Random] = None,
                         grid: Sequence[Fraction] = DEFAULT_GRID) -> IdealPropertyReport:
    T._check(S)
    rng = rng or random.Random(0)
    elements = elements_for(T.source, samples, rng)
    elements += [T.source.unit(s, r) for s in T.source.points for r in grid if r != 0]
    witness = None
    for x in elements:
        sx, tx = eval_op(S, x), eval_op(T, x)
        if not (T.target.zero().leq(sx) and sx.leq(tx)):
            witness = {"element": x, "Sx": sx, "Tx": tx}
            break
    hypothesis = witness is None
    t_atomic = is_atomic(T, h, grid=grid).verdict
    s_atomic = is_atomic(S, h, grid=grid).verdict
    passed = not (hypothesis and t_atomic) or s_atomic
    return IdealPropertyReport(hypothesis_holds=hypothesis, t_atomic=t_atomic, s_atomic=s_atomic,
                               checked=len(elements), passed=passed, witness=witness)


@dataclass
class AtomicConsequencesReport:
    """Disjointness preservation and T(F_x) ⊆ F_{Tx} for an operator."""

    disjointness_preserving: bool
    fragment_preserving: bool
    checked_pairs: int
    checked_fragments: int
    witness: Optional[Dict[str, Element]] = None

    @property
    def passed(self) -> bool:
        return self.disjointness_preserving and self.fragment_preserving


def atomic_consequences_check(T: KernelOperator, pairs: Iterable[Tuple[Element, Element]],
                              elements: Iterable[Element],
                              cap: int = DEFAULT_SUPPORT_CAP) -> AtomicConsequencesReport:
    """x ⊥ y ⇒ Tx ⊥ Ty on the pairs, and Ty ⊑ Tx for every fragment y of each element."""
    disjoint = is_disjointness_preserving(T, pairs)
    witness = disjoint.witness
    checked_fragments = 0
    fragment_ok = True
    for x in elements:
        tx = eval_op(T, x)
        for y in fragments(x, cap):
            checked_fragments += 1
            ty = eval_op(T, y)
            if not is_fragment(ty, tx):
                fragment_ok = False
                witness = witness or {"x": x, "y": y, "Tx": tx, "Ty": ty}
                break
        if not fragment_ok:
            break
    return AtomicConsequencesReport(
        disjointness_preserving=disjoint.passed,
        fragment_preserving=fragment_ok,
        checked_pairs=disjoint.checked_pairs,
        checked_fragments=checked_fragments,
        witness=witness,
    )
