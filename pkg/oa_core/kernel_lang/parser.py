"""
Recursive-descent parser for kernel expressions.

Grammar:
    expr     := term (("+"|"-") term)* ;
    term     := factor ("*" factor)* ;
    factor   := rational | "r" | "-" factor | "(" expr ")" | call ;
    call     := ("abs"|"min"|"max"|"pow"|"div"|"ifzero") "(" expr ("," expr)* ")" ;
    rational := integer ("/" positive-integer)? .

The second argument of pow must be a nonnegative integer literal.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List

from ..errors import KernelSyntaxError
from .nodes import Abs, Add, Div, IfZero, KernelExpr, Literal, Max, Min, Mul, Neg, Pow, Sub, Var

TOKEN_PATTERN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/(),])|(?P<bad>\S))")

ARITY: Dict[str, int] = {"abs": 1, "min": 2, "max": 2, "pow": 2, "div": 2, "ifzero": 3}


@dataclass(frozen=True)
class Token:
    kind: str  # "number", "name", "op", "end"
    text: str
    position: int


class Scanner:
    """Splits kernel expression text into tokens."""

    def __init__(self, text: str):
        self.text = text

    def tokens(self) -> List[Token]:
        tokens = []
        pos = 0
        while pos < len(self.text):
            match = TOKEN_PATTERN.match(self.text, pos)
            if match is None:
                # only trailing whitespace is left
                break
            kind = match.lastgroup
            start = match.start(kind)
            if kind == "bad":
                raise KernelSyntaxError(f"unexpected character {match.group(kind)!r}", start, self.text)
            tokens.append(Token(kind, match.group(kind), start))
            pos = match.end()
        tokens.append(Token("end", "", len(self.text)))
        return tokens


class Parser:
    """Parses a token stream into a ``KernelExpr``."""

    def __init__(self, text: str):
        self.text = text
        self._tokens = Scanner(text).tokens()
        self._pos = 0

    def parse(self) -> KernelExpr:
        expr = self._expression()
        if self._current.kind != "end":
            self._fail(f"unexpected {self._current.text!r}")
        return expr

    @property
    def _current(self) -> Token:
        return self._tokens[self._pos]

    def _advance(self) -> Token:
        token = self._current
        self._pos += 1
        return token

    def _fail(self, message: str, token: Token = None):
        token = token or self._current
        raise KernelSyntaxError(message, token.position, self.text)

    def _consume(self, text: str) -> Token:
        if self._current.text != text or self._current.kind not in ("op",):
            found = self._current.text or "end of input"
            self._fail(f"expected {text!r}, found {found!r}")
        return self._advance()

    def _binary_left(self, ops: Dict[str, Callable], sub_elem: Callable[[], KernelExpr]) -> KernelExpr:
        left = sub_elem()
        while self._current.kind == "op" and self._current.text in ops:
            op = ops[self._advance().text]
            left = op(left, sub_elem())
        return left

    def _expression(self) -> KernelExpr:
        return self._binary_left({"+": Add, "-": Sub}, self._term)

    def _term(self) -> KernelExpr:
        return self._binary_left({"*": Mul}, self._factor)

    def _factor(self) -> KernelExpr:
        token = self._current
        if token.kind == "number":
            return self._rational()
        if token.kind == "op" and token.text == "-":
            self._advance()
            return Neg(self._factor())
        if token.kind == "op" and token.text == "(":
            self._advance()
            expr = self._expression()
            self._consume(")")
            return expr
        if token.kind == "name":
            if token.text == "r":
                self._advance()
                return Var()
            if token.text in ARITY:
                return self._call()
            self._fail(f"unknown name {token.text!r}")
        found = token.text or "end of input"
        self._fail(f"expected an operand, found {found!r}")

    def _rational(self) -> Literal:
        numerator = int(self._advance().text)
        if self._current.kind == "op" and self._current.text == "/":
            self._advance()
            token = self._current
            if token.kind != "number":
                self._fail("expected a positive integer denominator")
            denominator = int(self._advance().text)
            if denominator == 0:
                self._fail("denominator must be positive", token)
            return Literal(Fraction(numerator, denominator))
        return Literal(Fraction(numerator))

    def _call(self) -> KernelExpr:
        name_token = self._advance()
        name = name_token.text
        self._consume("(")
        args: List[KernelExpr] = []
        if name == "pow":
            args.append(self._expression())
            self._consume(",")
            args.append(self._exponent())
        else:
            args.append(self._expression())
            while self._current.kind == "op" and self._current.text == ",":
                self._advance()
                args.append(self._expression())
        self._consume(")")
        if len(args) != ARITY[name]:
            self._fail(f"{name} takes {ARITY[name]} argument(s), got {len(args)}", name_token)

        if name == "abs":
            return Abs(args[0])
        if name == "min":
            return Min(args[0], args[1])
        if name == "max":
            return Max(args[0], args[1])
        if name == "pow":
            return Pow(args[0], args[1])
        if name == "div":
            return Div(args[0], args[1])
        return IfZero(args[0], args[1], args[2])

    def _exponent(self) -> int:
        token = self._current
        if token.kind == "op" and token.text == "-":
            self._fail("pow exponent must be nonnegative")
        if token.kind != "number":
            self._fail("pow exponent must be a nonnegative integer literal")
        self._advance()
        return int(token.text)


def parse(text: str) -> KernelExpr:
    """Parse kernel expression text into an AST."""
    return Parser(text).parse()
