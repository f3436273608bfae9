"""
Property suites run by ``oa verify-all``.

Each suite draws random objects from a seeded generator and checks the laws
of one area of the calculus. A property records how many instances were
checked and the first counterexample it met.
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..atomic import (
    atomic_consequences_check,
    band_projection_properties,
    ideal_property_check,
    is_atomic,
    partition_table,
    pointwise_lattice_op,
    subordinate_hom,
)
from ..errors import MathematicalFailure, OACoreError
from ..kernel_lang import parse
from ..lateral import LateralIdeal, PartialMap, extension_atomic_check, extension_properties, minimal_extension
from ..lattice import (
    FragmentOp,
    LatticeKind,
    fragment_algebra_report,
    fragment_bool_op,
    fragment_chain,
    is_disjoint,
    is_fragment,
    is_lateral_chain,
    lattice_op,
)
from ..operators import (
    OperatorLatticeKind,
    check_oa,
    elements_for,
    eval_op,
    is_positive_on_grid,
    oracle_search,
    regular_decomposition_check,
    sample_disjoint_pairs,
)
from ..projections import BooleanHom, OrderProjection, SetMapTable, hom_apply, hom_apply_projection, hom_check
from ..superposition import (
    ShiftOperator,
    compose_superposition,
    factor_atomic,
    rho_metric,
    shift_apply,
    superpose,
)
from ..utils.sampling import (
    random_element,
    random_kernel_expr,
    random_space,
    random_subset,
)
from .generators import random_atomic_operator, random_hom, random_ideal, random_operator, random_superposition_kernel

logger = logging.getLogger(__name__)


@dataclass
class PropertyResult:
    """Outcome of one property over its sampled instances."""
    suite: str
    name: str
    passed: bool
    checked: int
    witness: Optional[Dict[str, Any]] = None
    error: Optional[str] = None


class Tally:
    """Accumulates instance checks of a property; keeps the first counterexample."""

    def __init__(self, suite: str, name: str):
        self.suite = suite
        self.name = name
        self.checked = 0
        self.witness: Optional[Dict[str, Any]] = None
        self.error: Optional[str] = None

    def check(self, ok: bool, **witness: Any) -> bool:
        self.checked += 1
        if not ok and self.witness is None:
            self.witness = witness
        return ok

    def result(self) -> PropertyResult:
        return PropertyResult(self.suite, self.name, self.witness is None and self.error is None,
                              self.checked, self.witness, self.error)


@dataclass
class SuiteContext:
    """Everything a suite needs: seeded randomness, sizes and the grid."""
    rng: random.Random
    trials: int
    samples: int
    max_points: int
    grid: Sequence[Fraction]
    support_cap: int
    partition_cap: int
    full_cap: int
    workspaces: List[str] = field(default_factory=list)
    execute: Optional[Callable[..., Any]] = None

    def space(self, max_points: Optional[int] = None, min_points: int = 1):
        return random_space(self.rng, max_points or self.max_points, min_points)


def _run(suite: str, name: str, body: Callable[[Tally], None]) -> PropertyResult:
    tally = Tally(suite, name)
    try:
        body(tally)
    except OACoreError as e:
        tally.error = f"{type(e).__name__}: {e}"
    result = tally.result()
    logger.info(f"[{suite}] {name}: {'pass' if result.passed else 'FAIL'} ({result.checked} checks)")
    return result


def lattice_suite(ctx: SuiteContext) -> List[PropertyResult]:
    rng = ctx.rng

    def identities(t: Tally):
        for _ in range(ctx.trials):
            space = ctx.space()
            x, y = random_element(rng, space), random_element(rng, space)
            pos, neg = lattice_op(LatticeKind.POS, x), lattice_op(LatticeKind.NEG, x)
            j, m = lattice_op(LatticeKind.JOIN, x, y), lattice_op(LatticeKind.MEET, x, y)
            t.check(j == -lattice_op(LatticeKind.MEET, -x, -y), law="x v y = -(-x ^ -y)", x=x, y=y)
            t.check(j + m == x + y, law="x v y + x ^ y = x + y", x=x, y=y)
            t.check(x == pos - neg and lattice_op(LatticeKind.ABS, x) == pos + neg, law="x = x⁺ - x⁻", x=x)
            t.check(is_disjoint(pos, neg), law="x⁺ ⊥ x⁻", x=x)

    def fragment_algebra(t: Tally):
        for _ in range(ctx.trials):
            x = random_element(rng, ctx.space())
            report = fragment_algebra_report(x, ctx.support_cap)
            t.check(report.passed, element=x, failures=report.failures[:3])

    def fragment_operations(t: Tally):
        for _ in range(ctx.trials):
            space = ctx.space()
            x = random_element(rng, space)
            a, b = random_subset(rng, space.points), random_subset(rng, space.points)
            z, y = x.restrict(a), x.restrict(b)
            t.check(fragment_bool_op(FragmentOp.UNION, x, z, y) == x.restrict(a | b), op="union", x=x, z=z, y=y)
            t.check(fragment_bool_op(FragmentOp.INTERSECT, x, z, y) == x.restrict(a & b),
                    op="intersect", x=x, z=z, y=y)
            t.check(fragment_bool_op(FragmentOp.COMPLEMENT, x, z) == x.restrict(set(space.points) - a),
                    op="complement", x=x, z=z)

    def chains(t: Tally):
        for _ in range(ctx.trials):
            x = random_element(rng, ctx.space())
            chain = fragment_chain(x)
            ok = is_lateral_chain(chain) and all(is_fragment(a, b) for a, b in zip(chain, chain[1:]))
            t.check(ok and chain[-1] == x, element=x)

    return [
        _run("lattice", "lattice identities", identities),
        _run("lattice", "fragment Boolean algebra", fragment_algebra),
        _run("lattice", "fragment operations", fragment_operations),
        _run("lattice", "lateral chains", chains),
    ]


def projections_suite(ctx: SuiteContext) -> List[PropertyResult]:
    rng = ctx.rng

    def projection_algebra(t: Tally):
        for _ in range(ctx.trials):
            space = ctx.space()
            p = OrderProjection.of(space, random_subset(rng, space.points))
            q = OrderProjection.of(space, random_subset(rng, space.points))
            x = random_element(rng, space)
            t.check(p.meet(q)(x) == p(q(x)), law="meet is composition", x=x)
            t.check(p.join(q)(x) == p(x) + q(x) - p(q(x)), law="join", x=x)
            t.check(p.complement()(x) == x - p(x), law="complement", x=x)
            t.check(p.meet(q).leq(p) and p.leq(p.join(q)), law="order")

    def homomorphisms(t: Tally):
        for _ in range(ctx.trials):
            source, target = ctx.space(), ctx.space()
            h = random_hom(rng, source, target)
            report = hom_check(h, cap=ctx.full_cap)
            t.check(report.passed, hom=h.as_mapping(), failures=report.failures[:3])
            recovered = BooleanHom.from_table(SetMapTable.from_hom(h), cap=ctx.full_cap) \
                if len(source) <= ctx.full_cap else h
            t.check(recovered.point_map == h.point_map, law="table round trip", hom=h.as_mapping())
            p = OrderProjection.of(source, random_subset(rng, source.points))
            t.check(hom_apply_projection(h, p).carrier == hom_apply(h, p.carrier), law="projection image")

    def isomorphisms(t: Tally):
        for _ in range(ctx.trials):
            space = ctx.space()
            h = random_hom(rng, space, bijective=True)
            inverse = h.inverse()
            identity = BooleanHom.identity(space)
            t.check(h.compose(inverse).point_map == identity.point_map, law="h ∘ h⁻¹ = id", hom=h.as_mapping())
            t.check(inverse.compose(h).point_map == identity.point_map, law="h⁻¹ ∘ h = id", hom=h.as_mapping())

    return [
        _run("projections", "projection Boolean algebra", projection_algebra),
        _run("projections", "homomorphism axioms", homomorphisms),
        _run("projections", "isomorphism inverses", isomorphisms),
    ]


def kernel_lang_suite(ctx: SuiteContext) -> List[PropertyResult]:
    rng = ctx.rng
    probes = list(ctx.grid[::5]) + [Fraction(1, 1000), Fraction(-1, 7)]

    def print_parse(t: Tally):
        for _ in range(ctx.trials):
            e = random_kernel_expr(rng, depth=3)
            text = e.to_text()
            again = parse(text)
            t.check(again.to_text() == text, law="print is a fixed point of parse", text=text)
            t.check(all(e(r) == again(r) for r in probes), law="parse preserves values", text=text)

    def normalised(t: Tally):
        for _ in range(ctx.trials):
            e = random_kernel_expr(rng, depth=3)
            t.check(e(0) == 0, text=e.to_text())

    return [
        _run("kernel_lang", "print/parse agreement", print_parse),
        _run("kernel_lang", "generated kernels vanish at 0", normalised),
    ]


def operators_suite(ctx: SuiteContext) -> List[PropertyResult]:
    rng = ctx.rng

    def orthogonal_additivity(t: Tally):
        for _ in range(ctx.trials):
            source = ctx.space()
            T = random_operator(rng, source, ctx.space())
            report = check_oa(lambda x: eval_op(T, x), source, samples=ctx.samples, rng=rng)
            t.check(report.passed, witness=report.witness)

    def regular_decomposition(t: Tally):
        for _ in range(ctx.trials):
            T = random_operator(rng, ctx.space(), ctx.space())
            x = random_element(rng, T.source)
            report = regular_decomposition_check(T, x, ctx.support_cap)
            t.check(report.passed, element=x, failures=report.failures)

    def oracle_bounds(t: Tally):
        for _ in range(ctx.trials):
            source, target = ctx.space(), ctx.space()
            T, S = random_operator(rng, source, target), random_operator(rng, source, target)
            x = random_element(rng, source)
            tx, sx = eval_op(T, x), eval_op(S, x)
            j = oracle_search(OperatorLatticeKind.JOIN, T, S, x, ctx.support_cap).value
            m = oracle_search(OperatorLatticeKind.MEET, T, S, x, ctx.support_cap).value
            t.check(tx.leq(j) and sx.leq(j), law="T, S <= T v S", x=x)
            t.check(m.leq(tx) and m.leq(sx), law="T ^ S <= T, S", x=x)
            if len(x.support) <= 1:
                t.check(j + m == tx + sx, law="(T v S) + (T ^ S) = T + S on single points", x=x)

    def positive_parts(t: Tally):
        for _ in range(ctx.trials):
            T = random_operator(rng, ctx.space(), ctx.space(), positive=True)
            t.check(is_positive_on_grid(T, ctx.grid).positive, law="positive kernels give positive operators")
            x = random_element(rng, T.source, nonnegative=True)
            neg = oracle_search(OperatorLatticeKind.NEG, T, None, x, ctx.support_cap).value
            t.check(neg.is_zero(), law="T⁻ = 0 for positive T", x=x)

    return [
        _run("operators", "kernel operators are orthogonally additive", orthogonal_additivity),
        _run("operators", "regular decomposition", regular_decomposition),
        _run("operators", "oracle order bounds", oracle_bounds),
        _run("operators", "positive operators", positive_parts),
    ]


def atomic_suite(ctx: SuiteContext) -> List[PropertyResult]:
    rng = ctx.rng

    def oracle_equivalence(t: Tally):
        kinds = list(OperatorLatticeKind)
        for _ in range(ctx.trials):
            source, target = ctx.space(), ctx.space()
            h = random_hom(rng, source, target)
            T, S = random_atomic_operator(rng, h), random_atomic_operator(rng, h)
            kind = rng.choice(kinds)
            second = S if kind in (OperatorLatticeKind.JOIN, OperatorLatticeKind.MEET) else None
            result = pointwise_lattice_op(kind, T, second, h, grid=ctx.grid)
            for x in elements_for(source, 4, rng):
                expected = oracle_search(kind, T, second, x, ctx.support_cap).value
                t.check(eval_op(result, x) == expected, kind=kind.value, element=x)

    def subordinate_detection(t: Tally):
        for _ in range(ctx.trials):
            source, target = ctx.space(), ctx.space()
            h = random_hom(rng, source, target)
            T = random_atomic_operator(rng, h)
            found = subordinate_hom(T, grid=ctx.grid)
            t.check(found is not None and is_atomic(T, found, grid=ctx.grid).verdict, operator=T.to_table())

    def consequences(t: Tally):
        for _ in range(ctx.trials):
            source, target = ctx.space(), ctx.space()
            T = random_atomic_operator(rng, random_hom(rng, source, target))
            report = atomic_consequences_check(T, sample_disjoint_pairs(source, 10, rng),
                                               elements_for(source, 3, rng), ctx.support_cap)
            t.check(report.passed, witness=report.witness)

    def modes_agree(t: Tally):
        for _ in range(ctx.trials):
            source, target = ctx.space(min(ctx.max_points, 4)), ctx.space(min(ctx.max_points, 4))
            h = random_hom(rng, source, target)
            T = random_atomic_operator(rng, h) if rng.random() < 0.5 else random_operator(rng, source, target)
            single = is_atomic(T, h, "singleton", grid=ctx.grid).verdict
            full = is_atomic(T, h, "full", grid=ctx.grid, full_cap=ctx.full_cap, samples=5, rng=rng).verdict
            t.check(single == full, operator=T.to_table(), singleton=single, full=full)

    def band(t: Tally):
        for _ in range(ctx.trials):
            source = ctx.space(min(ctx.max_points, ctx.partition_cap, 5))
            h = random_hom(rng, source, ctx.space())
            T1 = random_operator(rng, source, h.target_space, positive=True, density=0.6)
            T2 = random_operator(rng, source, h.target_space, positive=True, density=0.6)
            report = band_projection_properties(T1, T2, h, samples=5, rng=rng, grid=ctx.grid)
            t.check(report.passed, checks=report.checks)
            table = partition_table(T1, h, elements_for(source, 5, rng, nonnegative=True), ctx.partition_cap)
            t.check(table.agrees, law="closed form equals the partition minimum")

    def ideal_property(t: Tally):
        for _ in range(ctx.trials):
            source, target = ctx.space(), ctx.space()
            h = random_hom(rng, source, target)
            T = random_atomic_operator(rng, h, positive=True)
            S = T.scale(Fraction(1, 2))
            report = ideal_property_check(T, S, h, samples=5, rng=rng, grid=ctx.grid)
            t.check(report.passed and report.hypothesis_holds, witness=report.witness)

    return [
        _run("atomic", "pointwise formulas match the oracle", oracle_equivalence),
        _run("atomic", "subordinate homomorphism detection", subordinate_detection),
        _run("atomic", "disjointness and fragment preservation", consequences),
        _run("atomic", "singleton and full modes agree", modes_agree),
        _run("atomic", "band projection", band),
        _run("atomic", "atomic operators form an ideal", ideal_property),
    ]


def superposition_suite(ctx: SuiteContext) -> List[PropertyResult]:
    rng = ctx.rng

    def factorization(t: Tally):
        for _ in range(ctx.trials):
            space = ctx.space()
            h = random_hom(rng, space, bijective=True)
            N = random_superposition_kernel(rng, space)
            T = compose_superposition(N, h)
            recovered = factor_atomic(T, h, grid=ctx.grid)
            t.check(all(a.to_text() == b.to_text() or all(a(r) == b(r) for r in ctx.grid)
                        for a, b in zip(N.expressions, recovered.expressions)), law="kernel recovery")
            for f in elements_for(space, 5, rng):
                t.check(eval_op(T, f) == superpose(recovered, shift_apply(ShiftOperator(h), f)), element=f)

    def shifts(t: Tally):
        for _ in range(ctx.trials):
            space = ctx.space()
            shift = ShiftOperator(random_hom(rng, space, bijective=True))
            f = random_element(rng, space)
            t.check(shift.inverse()(shift(f)) == f, law="S⁻¹ S = Id", element=f)
            t.check(eval_op(shift.as_operator(), f) == shift(f), law="shift as kernel operator", element=f)

    def metric(t: Tally):
        for _ in range(ctx.trials):
            space = random_space(rng, ctx.max_points, weighted=True)
            f, g, k = (random_element(rng, space) for _ in range(3))
            t.check(rho_metric(f, f) == 0 and (f == g or rho_metric(f, g) > 0), law="definite", f=f, g=g)
            t.check(rho_metric(f, g) == rho_metric(g, f), law="symmetric", f=f, g=g)
            t.check(rho_metric(f, k) <= rho_metric(f, g) + rho_metric(g, k), law="triangle", f=f, g=g, k=k)

    return [
        _run("superposition", "factorisation round trip", factorization),
        _run("superposition", "shift operators", shifts),
        _run("superposition", "metric axioms", metric),
    ]


def lateral_suite(ctx: SuiteContext) -> List[PropertyResult]:
    rng = ctx.rng

    def axioms(t: Tally):
        for _ in range(ctx.trials):
            space = ctx.space()
            for kind in ("order_ideal", "fragment_set", "operator_kernel"):
                D = random_ideal(rng, space, kind)
                report = D.axioms_report(samples=ctx.samples, rng=rng, cap=ctx.support_cap)
                t.check(report.passed, kind=kind, failures=report.failures[:3])

    def extension(t: Tally):
        for _ in range(ctx.trials):
            space = ctx.space(min(ctx.max_points, 5))
            h = random_hom(rng, space, ctx.space(min(ctx.max_points, 5)))
            T = random_atomic_operator(rng, h, positive=True)
            for kind in ("order_ideal", "fragment_set", "operator_kernel"):
                D = random_ideal(rng, space, kind)
                partial = PartialMap.from_operator(T, D, samples=10, rng=rng)
                props = extension_properties(partial, samples=10, pairs=20, rng=rng, cap=ctx.support_cap)
                t.check(props.passed, kind=kind, checks=props.checks)
                atomic = extension_atomic_check(partial, h, samples=10, rng=rng, cap=ctx.support_cap)
                t.check(atomic.passed, kind=kind, witness=atomic.witness)

    def empty_ideal(t: Tally):
        for _ in range(ctx.trials):
            space = ctx.space()
            T = random_operator(rng, space, ctx.space(), positive=True)
            partial = PartialMap.from_operator(T, LateralIdeal.explicit(space, []))
            x = random_element(rng, space)
            t.check(minimal_extension(partial, x, ctx.support_cap).is_zero(), element=x)

    return [
        _run("lateral", "lateral ideal axioms", axioms),
        _run("lateral", "minimal extension", extension),
        _run("lateral", "empty ideal extends by zero", empty_ideal),
    ]


def workspace_suite(ctx: SuiteContext) -> List[PropertyResult]:
    """Run the checks of every given workspace and compare with their expectations."""
    from ..workspace import load_workspace

    results = []
    for path in ctx.workspaces:
        def body(t: Tally, path=path):
            ws = load_workspace(path, grid=ctx.grid)
            for i, check in enumerate(ws.checks):
                args = {k: v for k, v in check.items() if k not in ("command", "expect", "name")}
                expect = check.get("expect", "pass")
                try:
                    outcome = "pass" if ctx.execute(ws, check["command"], **args).passed else "fail"
                except MathematicalFailure:
                    outcome = "fail"
                t.check(outcome == expect, check=check.get("name", f"{check['command']} #{i}"),
                        expected=expect, got=outcome)
        results.append(_run("workspace", str(path), body))
    return results


SUITES: Dict[str, Callable[[SuiteContext], List[PropertyResult]]] = {
    "lattice": lattice_suite,
    "projections": projections_suite,
    "kernel_lang": kernel_lang_suite,
    "operators": operators_suite,
    "atomic": atomic_suite,
    "superposition": superposition_suite,
    "lateral": lateral_suite,
    "workspace": workspace_suite,
}
