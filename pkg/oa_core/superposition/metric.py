"""
The metric of convergence in measure on a finite space.

rho(f, g) = sum_s lambda_s |f_s - g_s| / (1 + |f_s - g_s|), with lambda the
finite weight of the space.
"""

from fractions import Fraction
from typing import Callable, Iterable, List, Optional

from ..errors import StructuralError
from ..lattice import Element, Point


def _distance_terms(f: Element, g: Element):
    f._check(g)
    for p, a, b in zip(f.space.points, f.values, g.values):
        d = abs(a - b)
        yield p, d, d / (1 + d)


def rho_metric(f: Element, g: Element) -> Fraction:
    space = f.space
    total = Fraction(0)
    for (p, _, term), w in zip(_distance_terms(f, g), space.finite_weight):
        total += w * term
    return total


def rho_on(f: Element, g: Element, carrier: Optional[Iterable[Point]] = None) -> Fraction:
    """Integral of |f - g| / (1 + |f - g|) over a carrier against the weight nu."""
    keep = set(f.space.points if carrier is None else carrier)
    unknown = [p for p in keep if p not in f.space]
    if unknown:
        raise StructuralError(f"Carrier points {unknown!r} are not in {f.space.label}")
    total = Fraction(0)
    for (p, _, term), w in zip(_distance_terms(f, g), f.space.weight):
        if p in keep:
            total += w * term
    return total


def deviation_measure(f: Element, g: Element, delta) -> Fraction:
    """lambda({s : |f_s - g_s| > delta})."""
    delta = Fraction(delta)
    total = Fraction(0)
    for (p, d, _), w in zip(_distance_terms(f, g), f.space.finite_weight):
        if d > delta:
            total += w
    return total


def rho_along(T: Callable[[Element], Element], sequence: Iterable[Element], limit: Element) -> List[Fraction]:
    """rho(T f_n, T limit) along a sequence; stabilising sequences end at 0."""
    target = T(limit)
    return [rho_metric(T(f), target) for f in sequence]
