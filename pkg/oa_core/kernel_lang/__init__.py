"""
The one-variable kernel expression language: AST, parser and builders.
"""

from fractions import Fraction

from .nodes import (
    KernelExpr,
    Literal,
    Var,
    Neg,
    Add,
    Sub,
    Mul,
    Abs,
    Min,
    Max,
    Pow,
    Div,
    IfZero,
    is_zero_literal,
)
from .parser import Parser, Scanner, Token, parse
from .builders import ZERO, R, const, maximum, minimum, minus, modulus, negate, plus, scaled, times


def evaluate(e: KernelExpr, r) -> Fraction:
    """Exact value of e at r."""
    return e(r)


__all__ = [
    "KernelExpr",
    "Literal",
    "Var",
    "Neg",
    "Add",
    "Sub",
    "Mul",
    "Abs",
    "Min",
    "Max",
    "Pow",
    "Div",
    "IfZero",
    "is_zero_literal",
    "Parser",
    "Scanner",
    "Token",
    "parse",
    "evaluate",
    "ZERO",
    "R",
    "const",
    "maximum",
    "minimum",
    "minus",
    "modulus",
    "negate",
    "plus",
    "scaled",
    "times",
]
