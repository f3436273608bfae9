"""
Band projection onto the atomic operators subordinate to Phi.

For positive T:

    R(T)x = inf{ sum_i Phi(pi_i) T pi_i x : (pi_i) a finite partition of Id }

In the kernel model a partition P keeps kernel[s][t] exactly when s and
phi(t) share a block, so refining P only drops nonnegative terms and the
singleton partition attains the infimum: R(T) masks the kernel to the
entries (phi(t), t). The brute mode enumerates every set partition of the
source points to verify this.
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..errors import EnumerationCapError, MathematicalFailure, PositivityError
from ..lattice import Element, Point
from ..operators import (
    KernelOperator,
    elements_for,
    equal_on_grid,
    eval_op,
    is_positive_on_grid,
    single_point_contributions,
)
from ..projections import BooleanHom, hom_apply
from ..utils.partitions import set_partitions
from ..utils.sampling import DEFAULT_GRID
from .atomicity import check_hom_spaces, is_atomic

logger = logging.getLogger(__name__)

DEFAULT_PARTITION_CAP = 6

Partition = Tuple[Tuple[Point, ...], ...]


class BandMode(str, Enum):
    CLOSED_FORM = "closed_form"
    BRUTE = "brute"


def _require_positive(T: KernelOperator, grid: Sequence[Fraction]) -> None:
    report = is_positive_on_grid(T, grid)
    if not report.positive:
        w = report.witness
        raise PositivityError(
            f"Operator is not positive: kernel[{w['source']!r}][{w['target']!r}]({w['r']}) = {w['value']}",
            witness=w,
        )


def masked_operator(T: KernelOperator, h: BooleanHom) -> KernelOperator:
    """The kernel of T restricted to the entries (phi(t), t)."""
    return T.restrict_entries(lambda s, t: h.phi(t) == s)


@dataclass
class PartitionRow:
    """Band projection at one element: closed form against the minimum over partitions."""

    element: Element
    closed_form: Element
    minimum: Element
    minimizers: List[Partition]
    values: List[Tuple[Partition, Element]] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return self.closed_form == self.minimum


@dataclass
class PartitionTable:
    partitions: int
    rows: List[PartitionRow]

    @property
    def agrees(self) -> bool:
        return all(row.agrees for row in self.rows)


def partition_value(T: KernelOperator, h: BooleanHom, partition: Partition, x: Element) -> Element:
    """sum_i Phi(pi_{B_i}) T pi_{B_i} x."""
    total = T.target.zero()
    for block in partition:
        total = total + eval_op(T, x.restrict(block)).restrict(hom_apply(h, block))
    return total


def partition_table(T: KernelOperator, h: BooleanHom, elements: Sequence[Element],
                    partition_cap: int = DEFAULT_PARTITION_CAP, detail: bool = False) -> PartitionTable:
    """Minimum over all set partitions of the source, per element and coordinate.

    T pi_B x is summed from the single-point contributions T(x_s 1_{s}),
    which orthogonal additivity makes exact.
    """
    check_hom_spaces(T, h)
    points = T.source.points
    if len(points) > partition_cap:
        raise EnumerationCapError("partition source", len(points), partition_cap)

    partitions = list(set_partitions(points))
    targets = T.target.points
    # block containing phi(t), per partition and target
    images = [[next(block for block in p if h.phi(t) in block) for t in targets] for p in partitions]
    rows = []
    closed = masked_operator(T, h)
    for x in elements:
        parts = dict(zip(points, single_point_contributions(T, x, points)))
        values = []
        for p, blocks in zip(partitions, images):
            values.append(tuple(sum((parts[s][k] for s in blocks[k]), Fraction(0))
                                for k in range(len(targets))))
        minimum = tuple(min(v[k] for v in values) for k in range(len(targets)))
        minimizers = [p for p, v in zip(partitions, values) if v == minimum]
        rows.append(PartitionRow(
            element=x,
            closed_form=eval_op(closed, x),
            minimum=Element(T.target, minimum),
            minimizers=minimizers,
            values=[(p, Element(T.target, v)) for p, v in zip(partitions, values)] if detail else [],
        ))
    logger.info(f"Partition table over {len(partitions)} partitions and {len(rows)} elements")
    return PartitionTable(partitions=len(partitions), rows=rows)


def band_projection(T: KernelOperator, h: BooleanHom, mode: Union[BandMode, str] = BandMode.CLOSED_FORM,
                    grid: Sequence[Fraction] = DEFAULT_GRID, partition_cap: int = DEFAULT_PARTITION_CAP,
                    samples: int = 20, rng: Optional[random.Random] = None) -> KernelOperator:
    """R(T) for positive T.

    brute additionally compares the closed form with the minimum over all
    set partitions on sampled elements and raises MathematicalFailure on a
    mismatch.
    """
    mode = BandMode(mode)
    check_hom_spaces(T, h)
    _require_positive(T, grid)
    result = masked_operator(T, h)
    if mode is BandMode.BRUTE:
        elements = elements_for(T.source, samples, rng or random.Random(0))
        table = partition_table(T, h, elements, partition_cap)
        bad = next((row for row in table.rows if not row.agrees), None)
        if bad is not None:
            raise MathematicalFailure("Closed-form band projection differs from the partition minimum",
                                      witness=bad)
    return result


def atomic_complement(T: KernelOperator, h: BooleanHom) -> KernelOperator:
    """T - R(T): the entries of T off the graph of phi."""
    check_hom_spaces(T, h)
    return T.restrict_entries(lambda s, t: h.phi(t) != s)


@dataclass
class BandPropertiesReport:
    passed: bool
    checks: Dict[str, bool]
    failures: List[Dict[str, Any]] = field(default_factory=list)


def band_projection_properties(T1: KernelOperator, T2: KernelOperator, h: BooleanHom,
                               samples: int = 20, rng: Optional[random.Random] = None,
                               grid: Sequence[Fraction] = DEFAULT_GRID) -> BandPropertiesReport:
    """0 <= R(T)x <= Tx, R(T1 + T2) = R(T1) + R(T2), R∘R = R and R(T) = T iff T is atomic."""
    T1._check(T2)
    rng = rng or random.Random(0)
    elements = elements_for(T1.source, samples, rng)
    checks = {"bounds": True, "additive": True, "idempotent": True, "fixed_points": True}
    failures: List[Dict[str, Any]] = []

    def fail(name: str, **info):
        checks[name] = False
        if len(failures) < 20:
            failures.append({"property": name, **info})

    r1, r2 = band_projection(T1, h, grid=grid), band_projection(T2, h, grid=grid)
    r_sum = band_projection(T1 + T2, h, grid=grid)
    zero = T1.target.zero()
    for x in elements:
        for label, T, R in (("T1", T1, r1), ("T2", T2, r2)):
            rx, tx = eval_op(R, x), eval_op(T, x)
            if not (zero.leq(rx) and rx.leq(tx)):
                fail("bounds", operator=label, element=x, Rx=rx, Tx=tx)
        left, right = eval_op(r_sum, x), eval_op(r1, x) + eval_op(r2, x)
        if left != right:
            fail("additive", element=x, left=left, right=right)

    for label, T, R in (("T1", T1, r1), ("T2", T2, r2)):
        if not equal_on_grid(band_projection(R, h, grid=grid), R, grid):
            fail("idempotent", operator=label)
        fixed = equal_on_grid(R, T, grid)
        atomic = is_atomic(T, h, grid=grid).verdict
        if fixed != atomic:
            fail("fixed_points", operator=label, fixed=fixed, atomic=atomic)

    passed = all(checks.values())
    logger.info(f"Band projection properties on {len(elements)} elements: {'pass' if passed else 'fail'}")
    return BandPropertiesReport(passed=passed, checks=checks, failures=failures)
