"""
Deterministic random generation of test objects.

Every generator takes an explicit ``random.Random`` so that suites seeded
from the configuration reproduce byte-identical reports.
"""

import random
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from ..kernel_lang import KernelExpr, const, maximum, minimum, modulus, parse, plus, times
from ..lattice import Element, Point, Space

DEFAULT_EXTRA_POINTS = ("1/1000", "-1/1000", "1/3", "-1/3", "2/3", "-2/3", "1/7", "-1/7")


def rational_grid(lower=-10, upper=10, size: int = 201,
                  extra_points: Iterable = DEFAULT_EXTRA_POINTS) -> Tuple[Fraction, ...]:
    """Sorted exact grid: ``size`` uniform points in [lower, upper], the extra points and 0."""
    lower, upper = Fraction(lower), Fraction(upper)
    if size < 2 or upper <= lower:
        raise ValueError("grid needs size >= 2 and lower < upper")
    step = (upper - lower) / (size - 1)
    points = {lower + k * step for k in range(size)}
    points.update(Fraction(p) for p in extra_points)
    points.add(Fraction(0))
    return tuple(sorted(points))


DEFAULT_GRID = rational_grid()


def random_rational(rng: random.Random, max_numerator: int = 6, max_denominator: int = 4,
                    nonnegative: bool = False) -> Fraction:
    low = 0 if nonnegative else -max_numerator
    return Fraction(rng.randint(low, max_numerator), rng.randint(1, max_denominator))


def random_space(rng: random.Random, max_points: int = 6, min_points: int = 1,
                 weighted: bool = False, name: str = "") -> Space:
    n = rng.randint(min_points, max_points)
    if not weighted:
        return Space.range(n, name=name)
    weight = tuple(Fraction(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(n))
    finite = tuple(Fraction(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(n))
    return Space(tuple(range(n)), weight, finite, name)


def random_element(rng: random.Random, space: Space, density: float = 0.7,
                   max_numerator: int = 6, max_denominator: int = 4,
                   nonnegative: bool = False) -> Element:
    values = []
    for _ in space.points:
        if rng.random() < density:
            values.append(random_rational(rng, max_numerator, max_denominator, nonnegative))
        else:
            values.append(Fraction(0))
    return Element(space, tuple(values))


def random_subset(rng: random.Random, points: Sequence[Point]) -> frozenset:
    return frozenset(p for p in points if rng.random() < 0.5)


def random_disjoint_pair(rng: random.Random, space: Space, **kwargs) -> Tuple[Element, Element]:
    """Two elements with disjoint supports: one random element split along a random carrier."""
    x = random_element(rng, space, **kwargs)
    carrier = random_subset(rng, space.points)
    return x.restrict(carrier), x.restrict(set(space.points) - carrier)


def random_point_map(rng: random.Random, source: Space, target: Space) -> dict:
    """A total map target points -> source points."""
    return {t: rng.choice(source.points) for t in target.points}


def random_bijection(rng: random.Random, space: Space) -> dict:
    images = list(space.points)
    rng.shuffle(images)
    return dict(zip(space.points, images))


# Atoms vanish at 0 and are total on Q.
_ATOMS = (
    "r",
    "abs(r)",
    "max(r, 0)",
    "min(r, 0)",
    "pow(r, 2)",
    "pow(r, 3)",
    "r * abs(r)",
    "div(r, 1 + abs(r))",
    "ifzero(r, 0, div(1, pow(r, 2)))",
)

_POSITIVE_ATOMS = (
    "abs(r)",
    "max(r, 0)",
    "-min(r, 0)",
    "pow(r, 2)",
    "div(abs(r), 1 + pow(r, 2))",
    "ifzero(r, 0, div(1, pow(r, 2)))",
)


def random_kernel_expr(rng: random.Random, depth: int = 2, max_numerator: int = 6,
                       max_denominator: int = 4) -> KernelExpr:
    """A random expression g with g(0) = 0 that evaluates without error on Q."""
    if depth <= 0 or rng.random() < 0.35:
        atom = parse(rng.choice(_ATOMS))
        c = random_rational(rng, max_numerator, max_denominator)
        return atom if c in (0, 1) else times(const(c), atom)
    a = random_kernel_expr(rng, depth - 1, max_numerator, max_denominator)
    b = random_kernel_expr(rng, depth - 1, max_numerator, max_denominator)
    choice = rng.randrange(5)
    if choice == 0:
        return plus(a, b)
    if choice == 1:
        return maximum(a, b)
    if choice == 2:
        return minimum(a, b)
    if choice == 3:
        return modulus(a)
    return times(a, b)


def random_positive_kernel_expr(rng: random.Random, depth: int = 2, max_numerator: int = 6,
                                max_denominator: int = 4) -> KernelExpr:
    """A random expression g with g(0) = 0 and g >= 0 on Q."""
    if depth <= 0 or rng.random() < 0.4:
        atom = parse(rng.choice(_POSITIVE_ATOMS))
        c = random_rational(rng, max_numerator, max_denominator, nonnegative=True)
        if c == 0:
            c = Fraction(1)
        return atom if c == 1 else times(const(c), atom)
    a = random_positive_kernel_expr(rng, depth - 1, max_numerator, max_denominator)
    if rng.random() < 0.5:
        return modulus(random_kernel_expr(rng, depth - 1, max_numerator, max_denominator))
    b = random_positive_kernel_expr(rng, depth - 1, max_numerator, max_denominator)
    choice = rng.randrange(4)
    if choice == 0:
        return plus(a, b)
    if choice == 1:
        return maximum(a, b)
    if choice == 2:
        return minimum(a, b)
    return times(a, b)


def sample_elements(rng: random.Random, space: Space, count: int, seeds: Iterable[Element] = (),
                    **kwargs) -> List[Element]:
    """``count`` random elements preceded by the given seed elements."""
    elements = list(seeds)
    elements.extend(random_element(rng, space, **kwargs) for _ in range(count))
    return elements
