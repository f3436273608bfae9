"""
Boolean homomorphisms between projection algebras.

Every homomorphism between finite powerset algebras is a preimage map, so a
homomorphism Phi: B(E) -> B(F) is stored as a point map phi from the target
points to the source points, acting by Phi(A) = {t : phi(t) in A}.
Hand-written set-map tables are accepted only through ``hom_check``.
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from ..errors import HomomorphismError, StructuralError
from ..lattice import Point, Space
from .projection import OrderProjection

logger = logging.getLogger(__name__)

DEFAULT_FULL_CAP = 6


@dataclass(frozen=True)
class BooleanHom:
    """Phi: B(source) -> B(target) induced by phi: target points -> source points."""

    source_space: Space
    target_space: Space
    point_map: Tuple[Point, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        point_map = tuple(self.point_map)
        if len(point_map) != len(self.target_space.points):
            raise HomomorphismError(
                f"Point map must be total on the {len(self.target_space.points)} target points, "
                f"got {len(point_map)} entries"
            )
        unknown = [s for s in point_map if s not in self.source_space]
        if unknown:
            raise HomomorphismError(f"Point map hits unknown source points {unknown!r}")
        object.__setattr__(self, "point_map", point_map)

    @classmethod
    def from_mapping(cls, source: Space, target: Space, mapping: Mapping[Point, Point],
                     name: str = "") -> "BooleanHom":
        missing = [t for t in target.points if t not in mapping]
        if missing:
            raise HomomorphismError(f"Point map is not total: no image for target points {missing!r}")
        extra = [t for t in mapping if t not in target]
        if extra:
            raise HomomorphismError(f"Point map names unknown target points {extra!r}")
        return cls(source, target, tuple(mapping[t] for t in target.points), name)

    @classmethod
    def identity(cls, space: Space, name: str = "") -> "BooleanHom":
        return cls(space, space, tuple(space.points), name)

    @classmethod
    def from_table(cls, table: "SetMapTable", cap: int = DEFAULT_FULL_CAP) -> "BooleanHom":
        """Recover the point map of a hand-written table that passes ``hom_check``."""
        report = hom_check(table, cap=cap)
        if not report.passed:
            raise HomomorphismError(f"Set-map table is not a Boolean homomorphism: {report.failures[0]}")
        mapping = {}
        for s in table.source_space.points:
            for t in table(frozenset([s])):
                mapping[t] = s
        return cls.from_mapping(table.source_space, table.target_space, mapping)

    def phi(self, t: Point) -> Point:
        return self.point_map[self.target_space.index(t)]

    def as_mapping(self) -> Dict[Point, Point]:
        return dict(zip(self.target_space.points, self.point_map))

    def __call__(self, carrier: Iterable[Point]) -> FrozenSet[Point]:
        return hom_apply(self, carrier)

    def is_isomorphism(self) -> bool:
        """Phi is an isomorphism iff phi is a bijection."""
        return (len(self.source_space) == len(self.target_space)
                and len(set(self.point_map)) == len(self.point_map))

    def inverse(self) -> "BooleanHom":
        if not self.is_isomorphism():
            raise HomomorphismError("Only a bijective point map has an inverse homomorphism")
        mapping = {s: t for t, s in zip(self.target_space.points, self.point_map)}
        return BooleanHom.from_mapping(self.target_space, self.source_space, mapping)

    def compose(self, after: "BooleanHom") -> "BooleanHom":
        """``after`` ∘ ``self``: B(source) -> B(after.target)."""
        if after.source_space != self.target_space:
            raise StructuralError("Homomorphisms do not compose: spaces differ")
        return BooleanHom(self.source_space, after.target_space,
                          tuple(self.phi(after.phi(u)) for u in after.target_space.points))


def hom_apply(h: BooleanHom, carrier: Iterable[Point]) -> FrozenSet[Point]:
    """Phi(A) = {t : phi(t) in A}."""
    carrier = frozenset(carrier)
    unknown = [p for p in carrier if p not in h.source_space]
    if unknown:
        raise StructuralError(f"Points {unknown!r} are not in the source space {h.source_space.label}")
    return frozenset(t for t, s in zip(h.target_space.points, h.point_map) if s in carrier)


def hom_apply_projection(h: BooleanHom, p: OrderProjection) -> OrderProjection:
    """Phi acting on order projections."""
    if p.space != h.source_space:
        raise StructuralError("Projection does not live on the source space of the homomorphism")
    return OrderProjection(h.target_space, hom_apply(h, p.carrier))


@dataclass(frozen=True)
class SetMapTable:
    """A hand-written set map between powerset algebras."""

    source_space: Space
    target_space: Space
    mapping: Tuple[Tuple[FrozenSet[Point], FrozenSet[Point]], ...]

    @classmethod
    def of(cls, source: Space, target: Space,
           mapping: Mapping[Iterable[Point], Iterable[Point]]) -> "SetMapTable":
        return cls(source, target, tuple((frozenset(a), frozenset(b)) for a, b in mapping.items()))

    @classmethod
    def from_hom(cls, h: BooleanHom) -> "SetMapTable":
        return cls(h.source_space, h.target_space,
                   tuple((a, hom_apply(h, a)) for a in all_subsets(h.source_space.points)))

    def __call__(self, carrier: Iterable[Point]) -> FrozenSet[Point]:
        key = frozenset(carrier)
        for a, b in self.mapping:
            if a == key:
                return b
        raise KeyError(key)


@dataclass
class HomCheckReport:
    """Result of checking the homomorphism axioms."""

    passed: bool
    exhaustive: bool
    checked_pairs: int
    axioms: Dict[str, bool]
    failures: List[Dict[str, Any]] = field(default_factory=list)


def all_subsets(points: Iterable[Point]) -> List[FrozenSet[Point]]:
    points = list(points)
    return [frozenset(c) for k in range(len(points) + 1) for c in combinations(points, k)]


def hom_check(h: Union[BooleanHom, SetMapTable], cap: int = DEFAULT_FULL_CAP,
              samples: int = 200, rng: Optional[random.Random] = None) -> HomCheckReport:
    """Check Phi(A ∪ B) = Phi(A) ∪ Phi(B), Phi(A ∩ B) = Phi(A) ∩ Phi(B) and
    Phi(complement A) = complement Phi(A).

    All subset pairs are checked when the source has at most ``cap`` points,
    otherwise ``samples`` random pairs. Preimage maps always pass.
    """
    apply = (lambda a: hom_apply(h, a)) if isinstance(h, BooleanHom) else h
    source = list(h.source_space.points)
    target_all = frozenset(h.target_space.points)
    source_all = frozenset(source)
    exhaustive = len(source) <= cap

    if exhaustive:
        subsets = all_subsets(source)
        pairs = [(a, b) for a in subsets for b in subsets]
    else:
        rng = rng or random.Random(0)
        pairs = []
        for _ in range(samples):
            a = frozenset(p for p in source if rng.random() < 0.5)
            b = frozenset(p for p in source if rng.random() < 0.5)
            pairs.append((a, b))

    axioms = {"union": True, "intersection": True, "complement": True}
    failures: List[Dict[str, Any]] = []

    def record(axiom: str, a, b, lhs, rhs):
        axioms[axiom] = False
        if len(failures) < 20:
            failures.append({"axiom": axiom, "A": a, "B": b, "lhs": lhs, "rhs": rhs})

    for a, b in pairs:
        try:
            pa, pb = apply(a), apply(b)
            p_union, p_inter, p_comp = apply(a | b), apply(a & b), apply(source_all - a)
        except KeyError as e:
            record("union", a, b, f"missing table entry {set(e.args[0])!r}", None)
            continue
        if p_union != pa | pb:
            record("union", a, b, p_union, pa | pb)
        if p_inter != pa & pb:
            record("intersection", a, b, p_inter, pa & pb)
        if p_comp != target_all - pa:
            record("complement", a, b, p_comp, target_all - pa)

    passed = all(axioms.values())
    logger.info(f"Homomorphism check over {len(pairs)} pairs: {'pass' if passed else 'fail'}")
    return HomCheckReport(passed=passed, exhaustive=exhaustive, checked_pairs=len(pairs),
                          axioms=axioms, failures=failures)
