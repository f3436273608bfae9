"""
Core calculus engine - central coordinator for operator-calculus commands.

This module provides the CalculusEngine class that runs every command of the
command-line tool against a loaded workspace and returns uniform results.
"""

import inspect
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Tuple

from ..atomic import (
    BandMode,
    band_projection,
    is_atomic,
    partition_table,
    pointwise_lattice_op,
    subordinate_hom,
)
from ..errors import NotAtomicError, StructuralError
from ..lattice import Element, fragment_algebra_report, fragments, ordered_support
from ..lateral import MinimalExtension, PartialMap, extension_chain_report
from ..operators import (
    BINARY_KINDS,
    KernelOperator,
    OperatorLatticeKind,
    elements_for,
    eval_op,
    oracle_search,
    order_bound_witness,
)
from ..projections import BooleanHom
from ..superposition import deviation_measure, factor_atomic, rho_metric, rho_on, verify_factorization
from ..utils.rationals import to_rational
from ..utils.sampling import rational_grid
from .config import CalculusConfig
from .report import plain, show

logger = logging.getLogger(__name__)

COMMANDS = ("check-atomic", "project", "lattice", "factor", "extend", "fragments", "metric", "bound")


@dataclass
class CommandResult:
    """Result of one calculus command."""
    command: str
    passed: bool
    summary: str
    data: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        result = {
            "command": self.command,
            "passed": self.passed,
            "summary": self.summary,
            "data": plain(self.data),
        }
        if self.witness is not None:
            result["witness"] = plain(self.witness)
        return result


class CalculusEngine:
    """
    Central coordinator for calculus commands.

    Usage:
        engine = CalculusEngine(CalculusConfig.load_from_file("oa.yaml"))
        result = engine.execute(workspace, "check-atomic", op="T", hom="H")
    """

    def __init__(self, config: Optional[CalculusConfig] = None):
        self.config = config or CalculusConfig()
        self._grid: Optional[Tuple[Fraction, ...]] = None
        self._suites = None

    @property
    def grid(self) -> Tuple[Fraction, ...]:
        """The configured sampling grid (built once)."""
        if self._grid is None:
            self._grid = self.config.grid.points()
        return self._grid

    @property
    def suites(self):
        """Get the property-suite runner (lazy loaded)."""
        if self._suites is None:
            # Import here to avoid circular imports
            from ..validation import SuiteRunner
            self._suites = SuiteRunner(self.config)
        return self._suites

    def rng(self) -> random.Random:
        """A fresh generator per command, so reports do not depend on command order."""
        return random.Random(self.config.sampling.seed)

    def execute(self, workspace, command: str, **args: Any) -> CommandResult:
        """Run a named command with workspace references as arguments."""
        handlers: Dict[str, Callable[..., CommandResult]] = {
            "check-atomic": self._run_check_atomic,
            "project": self._run_project,
            "lattice": self._run_lattice,
            "factor": self._run_factor,
            "extend": self._run_extend,
            "fragments": self._run_fragments,
            "metric": self._run_metric,
            "bound": self._run_bound,
        }
        if command not in handlers:
            raise StructuralError(f"Unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
        handler = handlers[command]
        try:
            inspect.signature(handler).bind(workspace, **args)
        except TypeError as e:
            raise StructuralError(f"Bad arguments for {command}: {e}") from None
        logger.info(f"Running {command} with {sorted(k for k, v in args.items() if v is not None)}")
        return handler(workspace, **args)

    # Workspace-level adapters

    def _run_check_atomic(self, ws, op: str, hom: str, mode: str = "singleton") -> CommandResult:
        return self.check_atomic(ws.operator(op), ws.hom(hom), mode)

    def _run_project(self, ws, op: str, hom: str, verify_partitions: bool = False) -> CommandResult:
        return self.project(ws.operator(op), ws.hom(hom), verify_partitions)

    def _run_lattice(self, ws, kind: str, op: str, at: Any, op2: Optional[str] = None,
                     hom: Optional[str] = None, oracle: bool = False) -> CommandResult:
        T = ws.operator(op)
        S = ws.operator(op2) if op2 else None
        h = ws.hom(hom) if hom else None
        return self.lattice(kind, T, S, ws.element(at, T.source), oracle, h)

    def _run_factor(self, ws, op: str, hom: str, grid: Optional[int] = None) -> CommandResult:
        return self.factor(ws.operator(op), ws.hom(hom), grid)

    def _run_extend(self, ws, map: str, ideal: str, at: Any) -> CommandResult:
        D = ws.ideal(ideal)
        return self.extend(ws.operator(map), D, ws.element(at, D.space))

    def _run_fragments(self, ws, element: Any, space: Optional[str] = None) -> CommandResult:
        return self.fragments(ws.element(element, ws.space(space) if space else None))

    def _run_metric(self, ws, f: Any, g: Any, space: Optional[str] = None, delta: Any = None,
                    carrier: Optional[list] = None) -> CommandResult:
        fe = ws.element(f, ws.space(space) if space else None)
        return self.metric(fe, ws.element(g, fe.space), delta, carrier)

    def _run_bound(self, ws, op: str, box: Any, bound: Any, resolution: Optional[int] = None) -> CommandResult:
        T = ws.operator(op)
        return self.bound(T, ws.element(box, T.source), bound, resolution)

    # Commands

    def check_atomic(self, T: KernelOperator, h: BooleanHom, mode: str = "singleton") -> CommandResult:
        """Decide whether T is atomic subordinate to h."""
        report = is_atomic(T, h, mode=mode, grid=self.grid, full_cap=self.config.caps.full_mode_cap,
                           samples=self.config.sampling.samples, rng=self.rng())
        label = h.name or "the homomorphism"
        if report.verdict:
            summary = f"atomic subordinate to {label}"
        else:
            summary = f"not atomic subordinate to {label}"
        return CommandResult(
            command="check-atomic",
            passed=report.verdict,
            summary=summary,
            data={"operator": T.name, "hom": label, "mode": report.mode, "checked": report.checked},
            witness=report.witnesses[0].to_dict() if report.witnesses else None,
        )

    def project(self, T: KernelOperator, h: BooleanHom, verify_partitions: bool = False) -> CommandResult:
        """The band projection R(T), optionally checked against every set partition."""
        caps = self.config.caps
        R = band_projection(T, h, mode=BandMode.CLOSED_FORM, grid=self.grid, partition_cap=caps.partition_cap)
        data: Dict[str, Any] = {"operator": T.name, "projection": R}
        passed = True
        witness = None
        summary = "band projection computed"
        if verify_partitions:
            elements = elements_for(T.source, self.config.sampling.samples, self.rng(), nonnegative=True)
            table = partition_table(T, h, elements, caps.partition_cap, detail=True)
            data["partitions"] = table.partitions
            data["rows"] = table.rows
            passed = table.agrees
            if passed:
                summary = f"closed form attains the minimum over all {table.partitions} partitions"
            else:
                bad = next(row for row in table.rows if not row.agrees)
                witness = {"element": bad.element, "closed_form": bad.closed_form, "minimum": bad.minimum}
                summary = "closed form differs from the partition minimum"
        return CommandResult("project", passed, summary, data, witness)

    def lattice(self, kind: str, T: KernelOperator, S: Optional[KernelOperator], x: Element,
                oracle: bool = False, h: Optional[BooleanHom] = None) -> CommandResult:
        """T v S, T ^ S, T⁺, T⁻ or |T| at x, pointwise and optionally by the oracle."""
        kind = OperatorLatticeKind.parse(kind)
        if kind in BINARY_KINDS and S is None:
            raise StructuralError(f"{kind.value} needs --op2")
        data: Dict[str, Any] = {"kind": kind, "at": x}

        common = h or subordinate_hom(T, S, self.grid)
        pointwise_value = None
        if common is None:
            data["pointwise"] = "not applicable: operators are not atomic subordinate to a common homomorphism"
            if not oracle:
                raise NotAtomicError("Pointwise formula does not apply; rerun with --oracle")
        else:
            pointwise = pointwise_lattice_op(kind, T, S, common, grid=self.grid)
            pointwise_value = eval_op(pointwise, x)
            data["pointwise"] = pointwise_value
            data["kernel"] = pointwise

        if not oracle:
            return CommandResult("lattice", True, f"pointwise {kind.value} at x is {show(pointwise_value)}", data)

        result = oracle_search(kind, T, S, x, cap=self.config.caps.support_cap)
        data["oracle"] = result.value
        data["decompositions"] = result.decompositions
        data["attained_by"] = {t: list(c) for t, c in result.attained_by.items()}
        if pointwise_value is None:
            return CommandResult("lattice", True, f"oracle {kind.value} at x is {show(result.value)}; "
                                                  f"pointwise formula does not apply", data)
        if pointwise_value == result.value:
            return CommandResult("lattice", True, f"pointwise and oracle {kind.value} agree: "
                                                  f"{show(result.value)}", data)
        return CommandResult("lattice", False, "pointwise formula disagrees with the oracle", data,
                             witness={"element": x, "pointwise": pointwise_value, "oracle": result.value})

    def factor(self, T: KernelOperator, h: BooleanHom, grid_size: Optional[int] = None) -> CommandResult:
        """Recover N with T = T_N ∘ S_Phi and verify the factorisation."""
        grid = self.grid
        if grid_size is not None:
            cfg = self.config.grid
            grid = rational_grid(to_rational(cfg.lower), to_rational(cfg.upper), grid_size,
                                 [to_rational(p) for p in cfg.extra_points])
        N = factor_atomic(T, h, grid=grid)
        report = verify_factorization(T, h, N, grid=grid, samples=self.config.sampling.samples, rng=self.rng())
        conditions = N.check_conditions(grid, self.config.tolerance)
        data = {
            "operator": T.name,
            "kernel": N,
            "grid_points": report.grid_points,
            "samples": report.samples,
            "conditions": {
                "vanishes_at_zero": conditions.vanishes_at_zero,
                "flagged": conditions.flagged,
                "max_jumps": conditions.max_jumps,
            },
        }
        summary = "factorisation T = T_N ∘ S_Phi verified" if report.passed else \
            f"factorisation fails: {', '.join(report.failures)}"
        return CommandResult("factor", report.passed, summary, data, report.witness)

    def extend(self, T: KernelOperator, D, x: Element) -> CommandResult:
        """Minimal extension of T restricted to the ideal D, evaluated at x."""
        partial = PartialMap.from_operator(T, D, samples=self.config.sampling.samples, rng=self.rng())
        cap = self.config.caps.support_cap
        value = MinimalExtension(partial, cap)(x)
        contributing = [y for y in fragments(x, cap) if D.contains(y)]
        chain = extension_chain_report(partial, x, cap=cap)
        data = {
            "at": x,
            "value": value,
            "fragments_in_domain": contributing,
            "chain": {"values": chain.values, "monotone": chain.monotone, "stabilizes": chain.stabilizes},
        }
        summary = f"minimal extension at x is {show(value)}"
        if not contributing:
            summary += " (no fragment of x lies in the domain)"
        return CommandResult("extend", chain.monotone and chain.stabilizes, summary, data)

    def fragments(self, x: Element) -> CommandResult:
        """All fragments of x and a verification of their Boolean algebra."""
        cap = self.config.caps.support_cap
        report = fragment_algebra_report(x, cap)
        support = ordered_support(x)
        listing = {"{" + ",".join(str(p) for p in support if f[p] != 0) + "}": f for f in fragments(x, cap)}
        data = {
            "element": x,
            "support_size": report.support_size,
            "fragment_count": report.fragment_count,
            "fragments": listing,
            "checks": report.checks,
            "failures": report.failures,
        }
        summary = f"{report.fragment_count} fragments form a Boolean algebra" if report.passed else \
            "fragment algebra check failed"
        return CommandResult("fragments", report.passed, summary, data)

    def metric(self, f: Element, g: Element, delta: Any = None,
               carrier: Optional[list] = None) -> CommandResult:
        """rho(f, g) with its local form and, given delta, the deviation measure."""
        data: Dict[str, Any] = {"f": f, "g": g, "rho": rho_metric(f, g)}
        if carrier is not None:
            data["rho_on"] = rho_on(f, g, carrier)
        if delta is not None:
            data["deviation"] = deviation_measure(f, g, to_rational(delta))
        return CommandResult("metric", True, f"rho(f, g) = {show(data['rho'])}", data)

    def bound(self, T: KernelOperator, box: Element, M: Any, resolution: Optional[int] = None) -> CommandResult:
        """Search the box for an element whose image reaches M in modulus."""
        M = to_rational(M)
        witness = order_bound_witness(T, box, M, resolution or self.config.bound_search.resolution,
                                      self.config.caps.product_grid_cap)
        data = {"operator": T.name, "box": box, "bound": M}
        if witness is None:
            return CommandResult("bound", True, f"|Tx| stays below {show(M)} on the box grid", data)
        return CommandResult("bound", False, f"bound {show(M)} reached inside the box", data,
                             witness={"element": witness, "image": eval_op(T, witness)})
