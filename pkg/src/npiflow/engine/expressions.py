"""Arithmetic expression trees for model equations.

The grammar is deliberately closed: numbers, named references (resolved
against the enclosing model), the four arithmetic operators, unary minus,
parentheses, and the calls ``min(a, b)``, ``max(a, b)`` and
``clamp(x, lo, hi)``. There are no conditionals; time dependence enters a
model only through schedules.

    expression := term (('+' | '-') term)*
    term       := unary (('*' | '/') unary)*
    unary      := '-' unary | primary
    primary    := NUMBER | NAME | NAME '(' expression (',' expression)* ')'
                | '(' expression ')'
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

__all__ = [
    "Const",
    "Ref",
    "BinaryOp",
    "Call",
    "Expr",
    "ExpressionError",
    "ExpressionSyntaxError",
    "EvaluationError",
    "parse_expression",
    "eval_expression",
    "references",
]


class ExpressionError(Exception):
    """Base class for expression parsing and evaluation failures."""


class ExpressionSyntaxError(ExpressionError):
    """Malformed expression text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class EvaluationError(ExpressionError):
    """Runtime failure: unbound reference or division by zero."""


@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class BinaryOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    func: str  # min | max | clamp
    args: tuple["Expr", ...]


Expr = Union[Const, Ref, BinaryOp, Call]

# function name -> required argument count
_FUNCTIONS = {"min": 2, "max": 2, "clamp": 3}

_TOK_NUMBER = "number"
_TOK_NAME = "name"
_TOK_OP = "op"
_TOK_EOF = "eof"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit() or (c == "." and i + 1 < n and text[i + 1].isdigit()):
            start = i
            while i < n and (text[i].isdigit() or text[i] == "."):
                i += 1
            if i < n and text[i] in "eE":
                j = i + 1
                if j < n and text[j] in "+-":
                    j += 1
                if j < n and text[j].isdigit():
                    i = j
                    while i < n and text[i].isdigit():
                        i += 1
            lexeme = text[start:i]
            try:
                float(lexeme)
            except ValueError:
                raise ExpressionSyntaxError(f"bad number {lexeme!r}", start) from None
            tokens.append((_TOK_NUMBER, lexeme, start))
            continue
        if c.isalpha() or c == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append((_TOK_NAME, text[start:i], start))
            continue
        if c in "+-*/(),":
            tokens.append((_TOK_OP, c, i))
            i += 1
            continue
        raise ExpressionSyntaxError(f"unexpected character {c!r}", i)
    tokens.append((_TOK_EOF, "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, text, at = self.peek()
        if kind != _TOK_OP or text != op:
            raise ExpressionSyntaxError(f"expected {op!r}", at)
        self.advance()

    def parse_expression(self) -> Expr:
        node = self.parse_term()
        while True:
            kind, text, _ = self.peek()
            if kind == _TOK_OP and text in "+-":
                self.advance()
                node = BinaryOp(text, node, self.parse_term())
            else:
                return node

    def parse_term(self) -> Expr:
        node = self.parse_unary()
        while True:
            kind, text, _ = self.peek()
            if kind == _TOK_OP and text in "*/":
                self.advance()
                node = BinaryOp(text, node, self.parse_unary())
            else:
                return node

    def parse_unary(self) -> Expr:
        kind, text, _ = self.peek()
        if kind == _TOK_OP and text == "-":
            self.advance()
            operand = self.parse_unary()
            if isinstance(operand, Const):
                return Const(-operand.value)
            return BinaryOp("-", Const(0.0), operand)
        return self.parse_primary()

    def parse_primary(self) -> Expr:
        kind, text, at = self.advance()
        if kind == _TOK_NUMBER:
            return Const(float(text))
        if kind == _TOK_NAME:
            nxt_kind, nxt_text, _ = self.peek()
            if nxt_kind == _TOK_OP and nxt_text == "(":
                return self.parse_call(text, at)
            return Ref(text)
        if kind == _TOK_OP and text == "(":
            node = self.parse_expression()
            self.expect_op(")")
            return node
        raise ExpressionSyntaxError(
            "expected a number, name or parenthesised expression", at
        )

    def parse_call(self, func: str, at: int) -> Expr:
        if func not in _FUNCTIONS:
            raise ExpressionSyntaxError(f"unknown function {func!r}", at)
        self.expect_op("(")
        args = [self.parse_expression()]
        while True:
            kind, text, _ = self.peek()
            if kind == _TOK_OP and text == ",":
                self.advance()
                args.append(self.parse_expression())
            else:
                break
        self.expect_op(")")
        if len(args) != _FUNCTIONS[func]:
            raise ExpressionSyntaxError(
                f"{func} takes {_FUNCTIONS[func]} arguments, got {len(args)}", at
            )
        return Call(func, tuple(args))


def parse_expression(text: str) -> Expr:
    """Parse expression text into a tree; raises ExpressionSyntaxError."""
    if not text.strip():
        raise ExpressionSyntaxError("empty expression", 0)
    parser = _Parser(_tokenize(text))
    node = parser.parse_expression()
    kind, trailing, at = parser.peek()
    if kind != _TOK_EOF:
        raise ExpressionSyntaxError(f"unexpected trailing input {trailing!r}", at)
    return node


def eval_expression(expr: Expr, env: Mapping[str, float]) -> float:
    """Evaluate a tree against name bindings.

    Raises EvaluationError on an unbound reference or a zero denominator.
    """
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Ref):
        try:
            return env[expr.name]
        except KeyError:
            raise EvaluationError(f"unbound reference {expr.name!r}") from None
    if isinstance(expr, BinaryOp):
        left = eval_expression(expr.left, env)
        right = eval_expression(expr.right, env)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        if right == 0.0:
            raise EvaluationError("division by zero")
        return left / right
    left_args = [eval_expression(a, env) for a in expr.args]
    if expr.func == "min":
        return min(left_args[0], left_args[1])
    if expr.func == "max":
        return max(left_args[0], left_args[1])
    x, lo, hi = left_args
    return min(max(x, lo), hi)


def references(expr: Expr) -> Iterator[str]:
    """Yield every referenced name, in evaluation order (with repeats)."""
    if isinstance(expr, Ref):
        yield expr.name
    elif isinstance(expr, BinaryOp):
        yield from references(expr.left)
        yield from references(expr.right)
    elif isinstance(expr, Call):
        for arg in expr.args:
            yield from references(arg)


def is_finite_number(value: float) -> bool:
    return isinstance(value, (int, float)) and math.isfinite(value)
