"""
Helpers for building kernel expressions programmatically.

The atomic and superposition modules assemble result kernels from the
kernels of their inputs; these helpers keep literal zeros out of the trees
so that structural zero checks stay cheap.
"""

from fractions import Fraction
from typing import Any

from ..utils.rationals import to_rational
from .nodes import Abs, Add, KernelExpr, Literal, Max, Min, Mul, Neg, Sub, Var, is_zero_literal

ZERO = Literal(Fraction(0))
R = Var()


def const(q: Any) -> KernelExpr:
    """A rational constant; negative values print as a negated literal."""
    q = to_rational(q)
    if q < 0:
        return Neg(Literal(-q))
    return Literal(q)


def maximum(a: KernelExpr, b: KernelExpr) -> KernelExpr:
    if a == b:
        return a
    return Max(a, b)


def minimum(a: KernelExpr, b: KernelExpr) -> KernelExpr:
    if a == b:
        return a
    return Min(a, b)


def modulus(a: KernelExpr) -> KernelExpr:
    if is_zero_literal(a) or isinstance(a, Abs):
        return a
    return Abs(a)


def negate(a: KernelExpr) -> KernelExpr:
    if is_zero_literal(a):
        return a
    if isinstance(a, Neg):
        return a.operand
    return Neg(a)


def plus(a: KernelExpr, b: KernelExpr) -> KernelExpr:
    if is_zero_literal(a):
        return b
    if is_zero_literal(b):
        return a
    return Add(a, b)


def minus(a: KernelExpr, b: KernelExpr) -> KernelExpr:
    if is_zero_literal(b):
        return a
    if is_zero_literal(a):
        return negate(b)
    return Sub(a, b)


def times(a: KernelExpr, b: KernelExpr) -> KernelExpr:
    if is_zero_literal(a) or is_zero_literal(b):
        return ZERO
    return Mul(a, b)


def scaled(c: Any, a: KernelExpr) -> KernelExpr:
    """c * a, with c = 0 and c = 1 folded."""
    c = to_rational(c)
    if c == 0:
        return ZERO
    if c == 1:
        return a
    return times(const(c), a)
