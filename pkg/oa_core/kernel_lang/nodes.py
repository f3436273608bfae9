"""
AST of the one-variable kernel expression language.

Expressions are immutable trees over the variable ``r`` with exact rational
evaluation. ``to_text`` prints the minimal parenthesisation that parses back
to the same tree.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction

from ..errors import KernelEvaluationError, StructuralError
from ..utils.rationals import format_rational

PREC_SUM = 1
PREC_PRODUCT = 2
PREC_UNARY = 3
PREC_ATOM = 4


class KernelExpr(ABC):
    """A closed expression in the variable r."""

    precedence = PREC_ATOM

    @abstractmethod
    def evaluate(self, r: Fraction) -> Fraction:
        ...

    @abstractmethod
    def to_text(self) -> str:
        ...

    def __call__(self, r) -> Fraction:
        return self.evaluate(Fraction(r))

    def __str__(self) -> str:
        return self.to_text()

    def wrap(self, required: int) -> str:
        text = self.to_text()
        return f"({text})" if self.precedence < required else text


@dataclass(frozen=True)
class Literal(KernelExpr):
    value: Fraction

    def __post_init__(self):
        value = Fraction(self.value)
        if value < 0:
            raise StructuralError("Literals are nonnegative; negate them with Neg")
        object.__setattr__(self, "value", value)

    def evaluate(self, r: Fraction) -> Fraction:
        return self.value

    def to_text(self) -> str:
        return format_rational(self.value)


@dataclass(frozen=True)
class Var(KernelExpr):
    def evaluate(self, r: Fraction) -> Fraction:
        return r

    def to_text(self) -> str:
        return "r"


@dataclass(frozen=True)
class Neg(KernelExpr):
    operand: KernelExpr
    precedence = PREC_UNARY

    def evaluate(self, r: Fraction) -> Fraction:
        return -self.operand.evaluate(r)

    def to_text(self) -> str:
        return "-" + self.operand.wrap(PREC_UNARY)


@dataclass(frozen=True)
class Add(KernelExpr):
    left: KernelExpr
    right: KernelExpr
    precedence = PREC_SUM

    def evaluate(self, r: Fraction) -> Fraction:
        return self.left.evaluate(r) + self.right.evaluate(r)

    def to_text(self) -> str:
        return f"{self.left.wrap(PREC_SUM)} + {self.right.wrap(PREC_PRODUCT)}"


@dataclass(frozen=True)
class Sub(KernelExpr):
    left: KernelExpr
    right: KernelExpr
    precedence = PREC_SUM

    def evaluate(self, r: Fraction) -> Fraction:
        return self.left.evaluate(r) - self.right.evaluate(r)

    def to_text(self) -> str:
        return f"{self.left.wrap(PREC_SUM)} - {self.right.wrap(PREC_PRODUCT)}"


@dataclass(frozen=True)
class Mul(KernelExpr):
    left: KernelExpr
    right: KernelExpr
    precedence = PREC_PRODUCT

    def evaluate(self, r: Fraction) -> Fraction:
        return self.left.evaluate(r) * self.right.evaluate(r)

    def to_text(self) -> str:
        return f"{self.left.wrap(PREC_PRODUCT)} * {self.right.wrap(PREC_UNARY)}"


@dataclass(frozen=True)
class Abs(KernelExpr):
    arg: KernelExpr

    def evaluate(self, r: Fraction) -> Fraction:
        return abs(self.arg.evaluate(r))

    def to_text(self) -> str:
        return f"abs({self.arg.to_text()})"


@dataclass(frozen=True)
class Min(KernelExpr):
    left: KernelExpr
    right: KernelExpr

    def evaluate(self, r: Fraction) -> Fraction:
        return min(self.left.evaluate(r), self.right.evaluate(r))

    def to_text(self) -> str:
        return f"min({self.left.to_text()}, {self.right.to_text()})"


@dataclass(frozen=True)
class Max(KernelExpr):
    left: KernelExpr
    right: KernelExpr

    def evaluate(self, r: Fraction) -> Fraction:
        return max(self.left.evaluate(r), self.right.evaluate(r))

    def to_text(self) -> str:
        return f"max({self.left.to_text()}, {self.right.to_text()})"


@dataclass(frozen=True)
class Pow(KernelExpr):
    base: KernelExpr
    exponent: int

    def __post_init__(self):
        if isinstance(self.exponent, bool) or not isinstance(self.exponent, int) or self.exponent < 0:
            raise StructuralError(f"pow exponent must be a nonnegative integer, got {self.exponent!r}")

    def evaluate(self, r: Fraction) -> Fraction:
        return Fraction(self.base.evaluate(r)) ** self.exponent

    def to_text(self) -> str:
        return f"pow({self.base.to_text()}, {self.exponent})"


@dataclass(frozen=True)
class Div(KernelExpr):
    numerator: KernelExpr
    denominator: KernelExpr

    def evaluate(self, r: Fraction) -> Fraction:
        den = self.denominator.evaluate(r)
        if den == 0:
            raise KernelEvaluationError(f"division by zero in {self.to_text()} at r = {format_rational(r)}")
        return self.numerator.evaluate(r) / den

    def to_text(self) -> str:
        return f"div({self.numerator.to_text()}, {self.denominator.to_text()})"


@dataclass(frozen=True)
class IfZero(KernelExpr):
    """ifzero(c, a, b): a when c = 0, else b. Only the selected branch is evaluated."""

    condition: KernelExpr
    when_zero: KernelExpr
    otherwise: KernelExpr

    def evaluate(self, r: Fraction) -> Fraction:
        if self.condition.evaluate(r) == 0:
            return self.when_zero.evaluate(r)
        return self.otherwise.evaluate(r)

    def to_text(self) -> str:
        return f"ifzero({self.condition.to_text()}, {self.when_zero.to_text()}, {self.otherwise.to_text()})"


def is_zero_literal(e: KernelExpr) -> bool:
    return isinstance(e, Literal) and e.value == 0
