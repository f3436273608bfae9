"""
Fragments and the Boolean algebra F_x.

y is a fragment of x (y ⊑ x) when y ⊥ (x - y). In the finite model the
fragments of x are exactly the restrictions of x to subsets of its support,
and (F_x, ∪, ∩, complement, 0, x) is a Boolean algebra isomorphic to the
powerset of supp(x).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import EnumerationCapError, NotAFragmentError
from .space import Element, LatticeKind, Point, is_disjoint, lattice_op

logger = logging.getLogger(__name__)

DEFAULT_SUPPORT_CAP = 20


def ordered_support(x: Element) -> Tuple[Point, ...]:
    """Support of x in the point order of its space."""
    return tuple(p for p, v in x.items() if v != 0)


def fragments(x: Element, cap: int = DEFAULT_SUPPORT_CAP) -> Tuple[Element, ...]:
    """All fragments of x, one per subset of its support.

    Fragments are listed by subset bitmask over the ordered support, so the
    first is 0 and the last is x.
    """
    support = ordered_support(x)
    if len(support) > cap:
        raise EnumerationCapError("fragment support", len(support), cap)
    return tuple(x.restrict(subset) for subset in support_subsets(support))


def support_subsets(support: Sequence[Point]) -> List[Tuple[Point, ...]]:
    """Subsets of an ordered point list, indexed by bitmask."""
    n = len(support)
    return [tuple(support[i] for i in range(n) if mask >> i & 1) for mask in range(1 << n)]


def is_fragment(y: Element, x: Element) -> bool:
    """y ⊑ x, i.e. y ⊥ (x - y)."""
    return is_disjoint(y, x - y)


class FragmentOp(str, Enum):
    UNION = "union"
    INTERSECT = "intersect"
    COMPLEMENT = "complement"


def fragment_bool_op(kind: Union[FragmentOp, str], x: Element, z: Element,
                     y: Optional[Element] = None) -> Element:
    """Boolean operations of F_x.

    union:      (z⁺ ∨ y⁺) − (z⁻ ∨ y⁻)
    intersect:  (z⁺ ∧ y⁺) − (z⁻ ∧ y⁻)
    complement: x − z
    """
    kind = FragmentOp(kind)
    if not is_fragment(z, x):
        raise NotAFragmentError(f"{z!r} is not a fragment of {x!r}")
    if kind is FragmentOp.COMPLEMENT:
        return x - z

    if y is None:
        raise NotAFragmentError(f"{kind.value} needs two fragments")
    if not is_fragment(y, x):
        raise NotAFragmentError(f"{y!r} is not a fragment of {x!r}")
    combine = LatticeKind.JOIN if kind is FragmentOp.UNION else LatticeKind.MEET
    plus = lattice_op(combine, lattice_op(LatticeKind.POS, z), lattice_op(LatticeKind.POS, y))
    minus = lattice_op(combine, lattice_op(LatticeKind.NEG, z), lattice_op(LatticeKind.NEG, y))
    return plus - minus


def fragment_chain(x: Element, order: Optional[Iterable[Point]] = None) -> List[Element]:
    """The chain x|{a1} ⊑ x|{a1,a2} ⊑ ... ⊑ x along an ordering of supp(x).

    Starts at 0. This is the finite stand-in for a laterally convergent net.
    """
    support = list(order) if order is not None else list(ordered_support(x))
    chain = [x.space.zero()]
    for i in range(1, len(support) + 1):
        chain.append(x.restrict(support[:i]))
    if chain[-1] != x:
        chain.append(x)
    return chain


def is_lateral_chain(sequence: Sequence[Element]) -> bool:
    """(x_b - x_g) ⊥ x_g for every b >= g."""
    for g, later in enumerate(sequence):
        for b in range(g, len(sequence)):
            if not is_disjoint(sequence[b] - later, later):
                return False
    return True


@dataclass
class FragmentAlgebraReport:
    """Outcome of verifying A -> x|_A as a Boolean isomorphism."""

    element: Element
    support_size: int
    fragment_count: int
    passed: bool
    checks: int = 0
    failures: List[str] = field(default_factory=list)


def _coordinate_tables(x: Element, support: Sequence[Point]):
    """Per-coordinate truth tables of ∪, ∩ and ⊑ taken from the real formulas.

    Every fragment coordinate is 0 or x_p, so each operation at coordinate p
    is fixed by the two membership bits. The tables are computed by running
    ``fragment_bool_op`` on one-point restrictions.
    """
    tables = []
    for p in support:
        cell = x.restrict([p])
        values = {0: x.space.zero(), 1: cell}
        union, intersect, order = {}, {}, {}
        for bz, by in product((0, 1), repeat=2):
            u = fragment_bool_op(FragmentOp.UNION, cell, values[bz], values[by])
            i = fragment_bool_op(FragmentOp.INTERSECT, cell, values[bz], values[by])
            union[bz, by] = _bit(u, cell)
            intersect[bz, by] = _bit(i, cell)
            order[bz, by] = is_fragment(values[bz], values[by])
        complement = {b: _bit(fragment_bool_op(FragmentOp.COMPLEMENT, cell, values[b]), cell)
                      for b in (0, 1)}
        tables.append((union, intersect, complement, order))
    return tables


def _bit(value: Element, cell: Element) -> Optional[int]:
    if value.is_zero():
        return 0
    if value == cell:
        return 1
    return None


def fragment_algebra_report(x: Element, cap: int = DEFAULT_SUPPORT_CAP) -> FragmentAlgebraReport:
    """Exhaustively verify that A -> x|_A is a Boolean isomorphism onto F_x.

    Checks: the map is a bijection onto the enumerated fragments; ∪, ∩ and
    complement correspond to set union, intersection and complement for
    every pair of subsets; ⊑ corresponds to inclusion; and the Boolean
    algebra axioms hold for every triple of membership bits at every
    coordinate (the operations are coordinatewise, so this covers every
    triple of fragments).
    """
    support = ordered_support(x)
    frags = fragments(x, cap)
    n = len(support)
    full = (1 << n) - 1
    failures: List[str] = []
    checks = 0

    checks += 1
    if len(set(frags)) != 1 << n:
        failures.append(f"expected {1 << n} distinct fragments, got {len(set(frags))}")
    checks += 1
    if any(not is_fragment(f, x) for f in frags):
        failures.append("an enumerated restriction is not a fragment")

    tables = _coordinate_tables(x, support)
    for k, (union, intersect, complement, order) in enumerate(tables):
        if None in union.values() or None in intersect.values() or None in complement.values():
            failures.append(f"operation leaves F_x at coordinate {support[k]!r}")

    def apply(table_index: int, a: int, b: int) -> int:
        mask = 0
        for k, tables_k in enumerate(tables):
            if tables_k[table_index][a >> k & 1, b >> k & 1]:
                mask |= 1 << k
        return mask

    def leq(a: int, b: int) -> bool:
        return all(tables_k[3][a >> k & 1, b >> k & 1] for k, tables_k in enumerate(tables))

    if not failures:
        for a in range(full + 1):
            comp = 0
            for k, tables_k in enumerate(tables):
                if tables_k[2][a >> k & 1]:
                    comp |= 1 << k
            checks += 1
            if comp != full ^ a:
                failures.append(f"complement mismatch at subset mask {a}")
            for b in range(full + 1):
                checks += 3
                if apply(0, a, b) != a | b:
                    failures.append(f"union mismatch at masks {a}, {b}")
                if apply(1, a, b) != a & b:
                    failures.append(f"intersection mismatch at masks {a}, {b}")
                if leq(a, b) != (a & b == a):
                    failures.append(f"order mismatch at masks {a}, {b}")
                if len(failures) > 20:
                    break

    for k, (union, intersect, complement, order) in enumerate(tables):
        if failures:
            break
        checks += 1
        bad = _axiom_failures(union, intersect, complement, order)
        failures.extend(f"coordinate {support[k]!r}: {msg}" for msg in bad)

    logger.info(f"Fragment algebra of support {n}: {checks} checks, {len(failures)} failures")
    return FragmentAlgebraReport(
        element=x,
        support_size=n,
        fragment_count=len(frags),
        passed=not failures,
        checks=checks,
        failures=failures,
    )


def _axiom_failures(union, intersect, complement, order) -> List[str]:
    """Boolean-algebra and partial-order axioms over all bit triples."""
    bad = []
    bits = (0, 1)
    for a, b, c in product(bits, repeat=3):
        if union[a, b] != union[b, a] or intersect[a, b] != intersect[b, a]:
            bad.append(f"commutativity fails at {a, b}")
        if union[union[a, b], c] != union[a, union[b, c]]:
            bad.append(f"union associativity fails at {a, b, c}")
        if intersect[intersect[a, b], c] != intersect[a, intersect[b, c]]:
            bad.append(f"intersection associativity fails at {a, b, c}")
        if intersect[a, union[b, c]] != union[intersect[a, b], intersect[a, c]]:
            bad.append(f"distributivity fails at {a, b, c}")
        if union[a, intersect[a, b]] != a or intersect[a, union[a, b]] != a:
            bad.append(f"absorption fails at {a, b}")
        if union[a, 0] != a or intersect[a, 1] != a:
            bad.append(f"identity law fails at {a}")
        if union[a, complement[a]] != 1 or intersect[a, complement[a]] != 0:
            bad.append(f"complement law fails at {a}")
        if not order[a, a]:
            bad.append(f"reflexivity fails at {a}")
        if order[a, b] and order[b, a] and a != b:
            bad.append(f"antisymmetry fails at {a, b}")
        if order[a, b] and order[b, c] and not order[a, c]:
            bad.append(f"transitivity fails at {a, b, c}")
    return bad
