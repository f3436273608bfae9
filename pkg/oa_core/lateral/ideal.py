"""
Lateral ideals.

D ⊆ E is a lateral ideal when fragments of members are members and sums of
disjoint members are members. Four kinds are supported: order ideals
generated by finitely many elements, the fragment set F_u of an element, the
kernel of a positive operator and explicit finite lists (the empty list
included).
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..errors import LateralIdealError, StructuralError
from ..lattice import (
    DEFAULT_SUPPORT_CAP,
    Element,
    LatticeKind,
    Point,
    Space,
    fragments,
    is_disjoint,
    is_fragment,
    lattice_op,
)
from ..operators import KernelOperator, eval_op, is_positive_on_grid
from ..utils.sampling import DEFAULT_GRID, random_element, random_subset

logger = logging.getLogger(__name__)


class IdealKind(str, Enum):
    ORDER_IDEAL = "order_ideal"
    FRAGMENT_SET = "fragment_set"
    OPERATOR_KERNEL = "operator_kernel"
    EXPLICIT = "explicit"


FINITE_KINDS = {IdealKind.FRAGMENT_SET, IdealKind.EXPLICIT}


@dataclass
class IdealAxiomsReport:
    passed: bool
    exhaustive: bool
    checked: int
    failures: List[Dict[str, Any]] = field(default_factory=list)


@dataclass(frozen=True)
class LateralIdeal:
    space: Space
    kind: IdealKind
    generators: Tuple[Element, ...] = ()
    anchor: Optional[Element] = None
    operator: Optional[KernelOperator] = None
    members_list: Tuple[Element, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", IdealKind(self.kind))
        for x in self.generators + self.members_list + ((self.anchor,) if self.anchor is not None else ()):
            if x.space != self.space:
                raise StructuralError(f"Ideal element {x!r} does not live on {self.space.label}")
        if self.kind is IdealKind.FRAGMENT_SET and self.anchor is None:
            raise StructuralError("A fragment-set ideal needs an anchor element")
        if self.kind is IdealKind.OPERATOR_KERNEL:
            if self.operator is None:
                raise StructuralError("An operator-kernel ideal needs an operator")
            if self.operator.source != self.space:
                raise StructuralError("Operator source must be the ideal's space")

    @classmethod
    def order_ideal(cls, space: Space, generators: Sequence[Element], name: str = "",
                    check: bool = True) -> "LateralIdeal":
        ideal = cls(space, IdealKind.ORDER_IDEAL, generators=tuple(generators), name=name)
        return ideal._validated(check)

    @classmethod
    def fragment_set(cls, anchor: Element, name: str = "", check: bool = True) -> "LateralIdeal":
        ideal = cls(anchor.space, IdealKind.FRAGMENT_SET, anchor=anchor, name=name)
        return ideal._validated(check)

    @classmethod
    def operator_kernel(cls, operator: KernelOperator, name: str = "", check: bool = True,
                        grid: Sequence[Fraction] = DEFAULT_GRID) -> "LateralIdeal":
        """ker(T) for positive T; LateralIdealError when T fails positivity on the grid."""
        report = is_positive_on_grid(operator, grid)
        if not report.positive:
            raise LateralIdealError(
                f"ker(T) is only a lateral ideal for positive T; kernel "
                f"[{report.witness['source']!r}][{report.witness['target']!r}] is "
                f"{report.witness['value']} at r = {report.witness['r']}"
            )
        ideal = cls(operator.source, IdealKind.OPERATOR_KERNEL, operator=operator, name=name)
        return ideal._validated(check)

    @classmethod
    def explicit(cls, space: Space, members: Sequence[Element], name: str = "",
                 check: bool = True) -> "LateralIdeal":
        unique = tuple(dict.fromkeys(members))
        ideal = cls(space, IdealKind.EXPLICIT, members_list=unique, name=name)
        return ideal._validated(check)

    def _validated(self, check: bool) -> "LateralIdeal":
        if check:
            report = self.axioms_report()
            if not report.passed:
                raise LateralIdealError(f"Not a lateral ideal: {report.failures[0]['axiom']} fails "
                                        f"for {report.failures[0]['element']!r}")
        return self

    @cached_property
    def gauge(self) -> Element:
        """Join of the generator moduli; the order ideal is {x : |x| <= c·gauge for some c}."""
        g = self.space.zero()
        for x in self.generators:
            g = lattice_op(LatticeKind.JOIN, g, lattice_op(LatticeKind.ABS, x))
        return g

    def bound_constant(self, x: Element) -> Optional[Fraction]:
        """Smallest c with |x| <= c·gauge, or None when no c exists."""
        c = Fraction(0)
        for p, v in x.items():
            if v == 0:
                continue
            g = self.gauge[p]
            if g == 0:
                return None
            c = max(c, abs(v) / g)
        return c

    def contains(self, x: Element) -> bool:
        if x.space != self.space:
            raise StructuralError(f"Element lives on {x.space.label}, ideal on {self.space.label}")
        if self.kind is IdealKind.ORDER_IDEAL:
            return self.bound_constant(x) is not None
        if self.kind is IdealKind.FRAGMENT_SET:
            return is_fragment(x, self.anchor)
        if self.kind is IdealKind.OPERATOR_KERNEL:
            return eval_op(self.operator, x).is_zero()
        return x in self._member_set

    def __contains__(self, x: Element) -> bool:
        return self.contains(x)

    @cached_property
    def _member_set(self) -> frozenset:
        return frozenset(self.members_list)

    def is_finite(self) -> bool:
        return self.kind in FINITE_KINDS

    def members(self, cap: int = DEFAULT_SUPPORT_CAP) -> Tuple[Element, ...]:
        """All members of a finite ideal."""
        if self.kind is IdealKind.FRAGMENT_SET:
            return fragments(self.anchor, cap)
        if self.kind is IdealKind.EXPLICIT:
            return self.members_list
        raise StructuralError(f"A {self.kind.value} ideal is infinite; use sample_members")

    @cached_property
    def _kernel_values(self) -> Dict[Point, Tuple[Fraction, ...]]:
        """Per source point, the probe values r with T(r·1_s) = 0."""
        rows: Dict[Point, list] = {s: [] for s in self.space.points}
        for s, t, e in self.operator.entries:
            rows[s].append(e)
        probes = sorted(set(DEFAULT_GRID) | {Fraction(k, 2) for k in range(-8, 9)})
        return {s: tuple(r for r in probes if all(e.evaluate(r) == 0 for e in exprs))
                for s, exprs in rows.items()}

    def sample_members(self, rng: random.Random, n: int) -> List[Element]:
        """n random members; the empty ideal has none."""
        if self.kind is IdealKind.EXPLICIT:
            if not self.members_list:
                return []
            return [rng.choice(self.members_list) for _ in range(n)]
        samples = []
        for _ in range(n):
            if self.kind is IdealKind.ORDER_IDEAL:
                x = random_element(rng, self.space).restrict(self.gauge.support)
            elif self.kind is IdealKind.FRAGMENT_SET:
                x = self.anchor.restrict(random_subset(rng, self.space.points))
            else:
                values = self._kernel_values
                x = self.space.element({s: rng.choice(values[s]) for s in self.space.points})
            samples.append(x)
        return samples

    def axioms_report(self, samples: int = 50, rng: Optional[random.Random] = None,
                      cap: int = DEFAULT_SUPPORT_CAP) -> IdealAxiomsReport:
        """Fragment closure and closure under disjoint sums.

        Exhaustive over all members (and member pairs) of finite ideals,
        sampled otherwise; a sampled pass means "consistent", not proved.
        """
        rng = rng or random.Random(0)
        exhaustive = self.is_finite()
        members = list(self.members(cap)) if exhaustive else self.sample_members(rng, samples)
        failures: List[Dict[str, Any]] = []
        checked = 0

        for x in members:
            for y in fragments(x, cap):
                checked += 1
                if not self.contains(y):
                    failures.append({"axiom": "fragment closure", "element": x, "fragment": y})
                    break
            if len(failures) >= 10:
                break

        if exhaustive:
            pairs = [(x, y) for i, x in enumerate(members) for y in members[i:] if is_disjoint(x, y)]
        else:
            pairs = []
            for x, y in zip(members, reversed(members)):
                carrier = random_subset(rng, self.space.points)
                pairs.append((x.restrict(carrier), y.restrict(set(self.space.points) - carrier)))
        for x, y in pairs:
            if len(failures) >= 10:
                break
            checked += 1
            if not self.contains(x + y):
                failures.append({"axiom": "disjoint sums", "element": x, "other": y})

        passed = not failures
        logger.info(f"Lateral ideal axioms ({self.kind.value}, "
                    f"{'exhaustive' if exhaustive else 'sampled'}): {checked} checks, "
                    f"{'pass' if passed else 'fail'}")
        return IdealAxiomsReport(passed=passed, exhaustive=exhaustive, checked=checked, failures=failures)


def ideal_contains(D: LateralIdeal, x: Element) -> bool:
    return D.contains(x)
