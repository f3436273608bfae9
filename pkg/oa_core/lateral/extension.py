"""
Partial maps on lateral ideals and their minimal extension.

For a positive orthogonally additive T: D -> F the minimal extension is

    T̃(x) = sup{Ty : y ∈ F_x ∩ D},    sup ∅ = 0,

taken coordinatewise over the finitely many fragments of x.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

from ..errors import PositivityError, StructuralError
from ..lattice import (
    DEFAULT_SUPPORT_CAP,
    Element,
    LatticeKind,
    Point,
    Space,
    fragment_chain,
    fragments,
    lattice_op,
)
from ..operators import KernelOperator, eval_op
from ..projections import BooleanHom, hom_apply
from ..utils.sampling import random_disjoint_pair, random_element, random_subset
from .ideal import LateralIdeal

logger = logging.getLogger(__name__)


@dataclass
class PartialMapReport:
    orthogonally_additive: bool
    positive: bool
    checked: int
    witness: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.orthogonally_additive and self.positive


class PartialMap:
    """A map T: D -> F defined on the members of a lateral ideal."""

    def __init__(self, domain: LateralIdeal, target: Space, action: Callable[[Element], Element],
                 positive: bool = True, name: str = "", check: bool = True, samples: int = 50,
                 rng: Optional[random.Random] = None):
        self.domain = domain
        self.target = target
        self._action = action
        self.positive = positive
        self.name = name
        if check:
            report = self.check(samples, rng)
            if not report.orthogonally_additive:
                raise StructuralError(f"Partial map {name!r} is not orthogonally additive on its domain")
            if positive and not report.positive:
                raise PositivityError(f"Partial map {name!r} takes a negative value", witness=report.witness)

    @classmethod
    def from_operator(cls, T: KernelOperator, domain: LateralIdeal, **kwargs) -> "PartialMap":
        if T.source != domain.space:
            raise StructuralError("Operator source must be the domain's space")
        kwargs.setdefault("name", T.name)
        return cls(domain, T.target, lambda x: eval_op(T, x), **kwargs)

    @classmethod
    def from_values(cls, domain: LateralIdeal, target: Space,
                    values: Mapping[Element, Element], **kwargs) -> "PartialMap":
        """A map on a finite ideal given member by member; unlisted members map to 0."""
        table = dict(values)
        for x in table:
            if not domain.contains(x):
                raise StructuralError(f"{x!r} is not a member of the domain")
        zero = target.zero()
        return cls(domain, target, lambda x: table.get(x, zero), **kwargs)

    @property
    def space(self) -> Space:
        return self.domain.space

    def __call__(self, x: Element) -> Element:
        if not self.domain.contains(x):
            raise StructuralError(f"{x!r} is outside the domain of {self.name or 'the partial map'}")
        return self._action(x)

    def domain_samples(self, samples: int, rng: random.Random) -> List[Element]:
        if self.domain.is_finite():
            return list(self.domain.members())
        return self.domain.sample_members(rng, samples)

    def check(self, samples: int = 50, rng: Optional[random.Random] = None) -> PartialMapReport:
        """T(y + z) = Ty + Tz for disjoint member pairs, and Ty >= 0 on members."""
        rng = rng or random.Random(0)
        members = self.domain_samples(samples, rng)
        zero = self.target.zero()
        checked = 0
        for x in members:
            checked += 1
            tx = self(x)
            if self.positive and not zero.leq(tx):
                return PartialMapReport(True, False, checked, {"element": x, "Tx": tx})
            carrier = random_subset(rng, self.space.points)
            y, z = x.restrict(carrier), x.restrict(set(self.space.points) - carrier)
            if tx != self(y) + self(z):
                return PartialMapReport(False, True, checked, {"y": y, "z": z})
        return PartialMapReport(True, True, checked)


def minimal_extension(T: PartialMap, x: Element, cap: int = DEFAULT_SUPPORT_CAP) -> Element:
    """Coordinatewise max of Ty over the fragments y of x that lie in D; 0 when there are none."""
    if not T.positive:
        raise PositivityError("The minimal extension is defined for positive maps only")
    if x.space != T.space:
        raise StructuralError(f"Element lives on {x.space.label}, domain on {T.space.label}")
    result = T.target.zero()
    for y in fragments(x, cap):
        if T.domain.contains(y):
            result = lattice_op(LatticeKind.JOIN, result, T(y))
    return result


class MinimalExtension:
    """T̃ as a black-box map on the whole space."""

    def __init__(self, T: PartialMap, cap: int = DEFAULT_SUPPORT_CAP):
        self.partial = T
        self.cap = cap

    def __call__(self, x: Element) -> Element:
        return minimal_extension(self.partial, x, self.cap)


@dataclass
class ExtensionAtomicReport:
    precondition_holds: bool
    atomic: bool
    extends: bool
    checked: int
    witness: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.precondition_holds and self.atomic and self.extends


def _projection_mismatch(apply: Callable[[Element], Element], h: BooleanHom, x: Element,
                         carriers: Sequence[frozenset]) -> Optional[Dict[str, Any]]:
    tx = apply(x)
    for carrier in carriers:
        left = apply(x.restrict(carrier))
        right = tx.restrict(hom_apply(h, carrier))
        if left != right:
            return {"carrier": sorted(carrier, key=x.space.index), "element": x, "left": left, "right": right}
    return None


def extension_atomic_check(T: PartialMap, h: BooleanHom, samples: int = 50,
                           rng: Optional[random.Random] = None,
                           cap: int = DEFAULT_SUPPORT_CAP) -> ExtensionAtomicReport:
    """Atomicity of T̃ subordinate to Phi, given T atomic on D.

    The precondition T(pi y) = Phi(pi)T(y) is sample-checked on members; if
    it fails the report is a rejection, never a pass.
    """
    if h.source_space != T.space or h.target_space != T.target:
        raise StructuralError("Homomorphism does not match the partial map's spaces")
    rng = rng or random.Random(0)
    space = T.space
    singletons = [frozenset([p]) for p in space.points]
    members = T.domain_samples(samples, rng)
    checked = 0

    for y in members:
        checked += 1
        mismatch = _projection_mismatch(T, h, y, singletons + [random_subset(rng, space.points)])
        if mismatch is not None:
            logger.info("Partial map is not atomic on its domain; extension check rejected")
            return ExtensionAtomicReport(False, False, False, checked, mismatch)

    extension = MinimalExtension(T, cap)
    for y in members:
        checked += 1
        ey, ty = extension(y), T(y)
        if ey != ty:
            return ExtensionAtomicReport(True, True, False, checked, {"element": y, "extension": ey, "T": ty})

    for _ in range(samples):
        checked += 1
        x = random_element(rng, space)
        mismatch = _projection_mismatch(extension, h, x, singletons + [random_subset(rng, space.points)])
        if mismatch is not None:
            return ExtensionAtomicReport(True, False, True, checked, mismatch)

    logger.info(f"Minimal extension atomic on {checked} checks")
    return ExtensionAtomicReport(True, True, True, checked)


@dataclass
class ExtensionPropertiesReport:
    passed: bool
    checks: Dict[str, bool]
    checked_pairs: int
    failures: List[Dict[str, Any]] = field(default_factory=list)


def extension_properties(T: PartialMap, samples: int = 50, pairs: int = 500,
                         rng: Optional[random.Random] = None,
                         cap: int = DEFAULT_SUPPORT_CAP) -> ExtensionPropertiesReport:
    """T̃ extends T, is orthogonally additive on disjoint pairs and monotone along fragments."""
    rng = rng or random.Random(0)
    extension = MinimalExtension(T, cap)
    checks = {"extends": True, "orthogonally_additive": True, "monotone": True}
    failures: List[Dict[str, Any]] = []

    def fail(name: str, **info):
        checks[name] = False
        if len(failures) < 20:
            failures.append({"property": name, **info})

    for y in T.domain_samples(samples, rng):
        if extension(y) != T(y):
            fail("extends", element=y)

    for _ in range(pairs):
        x1, x2 = random_disjoint_pair(rng, T.space)
        left, right = extension(x1 + x2), extension(x1) + extension(x2)
        if left != right:
            fail("orthogonally_additive", x1=x1, x2=x2, left=left, right=right)

    for _ in range(samples):
        x = random_element(rng, T.space)
        y = x.restrict(random_subset(rng, T.space.points))
        if not extension(y).leq(extension(x)):
            fail("monotone", x=x, y=y)

    return ExtensionPropertiesReport(passed=all(checks.values()), checks=checks,
                                     checked_pairs=pairs, failures=failures)


@dataclass
class ChainReport:
    """Extension values along an increasing fragment chain ending at x."""

    chain: List[Element]
    values: List[Element]
    monotone: bool
    stabilizes: bool


def extension_chain_report(T: PartialMap, x: Element, order: Optional[Sequence[Point]] = None,
                           cap: int = DEFAULT_SUPPORT_CAP) -> ChainReport:
    chain = fragment_chain(x, order)
    extension = MinimalExtension(T, cap)
    values = [extension(y) for y in chain]
    monotone = all(a.leq(b) for a, b in zip(values, values[1:]))
    return ChainReport(chain=chain, values=values, monotone=monotone, stabilizes=values[-1] == extension(x))
