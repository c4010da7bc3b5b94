"""Recursive-descent parser and printer for the expression grammar.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' uint)?
    atom   := number | 't' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')' | '-' atom

Whitespace is insignificant. Unary minus belongs to the atom, so ``-t^2`` reads
as ``(-t)^2`` and ``-(t^2)`` needs explicit parentheses. Error offsets count
bytes of the UTF-8 encoded source.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal, cast

from minsurf_analytic.exceptions import (
    ExpressionSyntaxError,
    InvalidExponentError,
    UnknownIdentifierError,
)
from minsurf_analytic.nodes import (
    FUNCTION_NAMES,
    NAMED_CONSTANTS,
    VARIABLE_NAME,
    AnalyticExpr,
    Call,
    Constant,
    Difference,
    FunctionName,
    Negation,
    Power,
    Product,
    Quotient,
    Sum,
    Variable,
)

if TYPE_CHECKING:
    from collections.abc import Iterator

type TokenKind = Literal["number", "name", "op", "end"]

_TOKEN_PATTERN = re.compile(
    r"""
    (?P<space>\s+)
    | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
    | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
    | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)
_UINT_PATTERN = re.compile(r"\d+")


@dataclass(frozen=True, slots=True)
class Token:
    kind: TokenKind
    text: str
    offset: int


def tokenize(source: str) -> Iterator[Token]:
    """Yield tokens of ``source`` followed by a single ``end`` token.

    Token offsets are byte offsets into the UTF-8 encoding of ``source``.
    """
    position = 0
    offset = 0
    while position < len(source):
        match = _TOKEN_PATTERN.match(source, position)
        if match is None:
            msg = f"Unexpected character {source[position]!r}"
            raise ExpressionSyntaxError(msg, offset)
        kind = match.lastgroup
        text = match.group()
        if kind != "space":
            yield Token(cast("TokenKind", kind), text, offset)
        position = match.end()
        offset += len(text.encode())
    yield Token("end", "", offset)


class _Parser:
    def __init__(self, source: str) -> None:
        self._tokens = list(tokenize(source))
        self._index = 0

    @property
    def _current(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._current
        if token.kind != "end":
            self._index += 1
        return token

    def _expect(self, text: str) -> None:
        token = self._current
        if token.text != text or token.kind != "op":
            raise ExpressionSyntaxError(_describe_unexpected(token, f"'{text}'"), token.offset)
        self._advance()

    def parse(self) -> AnalyticExpr:
        expr = self._expr()
        token = self._current
        if token.kind != "end":
            raise ExpressionSyntaxError(_describe_unexpected(token, "end of input"), token.offset)
        return expr

    def _expr(self) -> AnalyticExpr:
        node = self._term()
        while self._current.kind == "op" and self._current.text in {"+", "-"}:
            operator = self._advance().text
            right = self._term()
            node = Sum(node, right) if operator == "+" else Difference(node, right)
        return node

    def _term(self) -> AnalyticExpr:
        node = self._factor()
        while self._current.kind == "op" and self._current.text in {"*", "/"}:
            operator = self._advance().text
            right = self._factor()
            node = Product(node, right) if operator == "*" else Quotient(node, right)
        return node

    def _factor(self) -> AnalyticExpr:
        base = self._atom()
        if self._current.kind == "op" and self._current.text == "^":
            self._advance()
            token = self._current
            if token.kind != "number" or _UINT_PATTERN.fullmatch(token.text) is None:
                raise InvalidExponentError(token.offset)
            self._advance()
            return Power(base, int(token.text))
        return base

    def _atom(self) -> AnalyticExpr:
        token = self._current
        if token.kind == "number":
            self._advance()
            return Constant(float(token.text))
        if token.kind == "name":
            return self._named(token)
        if token.kind == "op" and token.text == "(":
            self._advance()
            inner = self._expr()
            self._expect(")")
            return inner
        if token.kind == "op" and token.text == "-":
            self._advance()
            return Negation(self._atom())
        raise ExpressionSyntaxError(_describe_unexpected(token, "an operand"), token.offset)

    def _named(self, token: Token) -> AnalyticExpr:
        self._advance()
        if token.text == VARIABLE_NAME:
            return Variable()
        if token.text in NAMED_CONSTANTS:
            return Constant(NAMED_CONSTANTS[token.text], token.text)
        if token.text in FUNCTION_NAMES:
            self._expect("(")
            argument = self._expr()
            self._expect(")")
            return Call(cast("FunctionName", token.text), argument)
        raise UnknownIdentifierError(token.text, token.offset)


def _describe_unexpected(token: Token, expected: str) -> str:
    found = "end of input" if token.kind == "end" else f"'{token.text}'"
    return f"Expected {expected}, found {found}"


def parse_expr(source: str) -> AnalyticExpr:
    """Parse ``source`` into an expression tree.

    Args:
        source: Expression text in the variable ``t``.

    Returns:
        The unfolded expression tree.

    Raises:
        ExpressionSyntaxError: With the byte offset of the offending token.
        UnknownIdentifierError: For names outside the grammar.
        InvalidExponentError: When ``^`` is not followed by an unsigned integer.

    """
    return _Parser(source).parse()


def to_source(expr: AnalyticExpr) -> str:
    """Print ``expr`` fully parenthesized; ``parse_expr`` reads the output back."""
    match expr:
        case Constant(value=value, name=name):
            if name is not None:
                return name
            text = repr(float(value))
            return f"({text})" if value < 0 else text
        case Variable():
            return VARIABLE_NAME
        case Sum(left=left, right=right):
            return f"({to_source(left)} + {to_source(right)})"
        case Difference(left=left, right=right):
            return f"({to_source(left)} - {to_source(right)})"
        case Product(left=left, right=right):
            return f"({to_source(left)} * {to_source(right)})"
        case Quotient(numerator=left, denominator=right):
            return f"({to_source(left)} / {to_source(right)})"
        case Power(base=base, exponent=exponent):
            return f"({to_source(base)}^{exponent})"
        case Negation(operand=operand):
            return f"(-{to_source(operand)})"
        case Call(function=function, argument=argument):
            return f"{function}({to_source(argument)})"
