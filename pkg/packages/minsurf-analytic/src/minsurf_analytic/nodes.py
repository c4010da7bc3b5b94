"""Immutable expression nodes and constant-folding constructors.

Nodes are frozen dataclasses, so trees can be shared freely between threads and
used as dictionary keys. The constructors below (``add``, ``mul``, ...) fold
constant operands and drop neutral elements; the parser builds nodes directly
and never folds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

type FunctionName = Literal["sin", "cos", "sinh", "cosh", "exp", "sqrt"]

FUNCTION_NAMES: frozenset[str] = frozenset({"sin", "cos", "sinh", "cosh", "exp", "sqrt"})
NAMED_CONSTANTS: dict[str, float] = {"pi": math.pi, "e": math.e}
VARIABLE_NAME = "t"


@dataclass(frozen=True, slots=True)
class Constant:
    """Real literal, optionally carrying the name it was written with."""

    value: float
    name: str | None = None


@dataclass(frozen=True, slots=True)
class Variable:
    """The single free variable ``t``."""

    name: str = VARIABLE_NAME


@dataclass(frozen=True, slots=True)
class Sum:
    left: AnalyticExpr
    right: AnalyticExpr


@dataclass(frozen=True, slots=True)
class Difference:
    left: AnalyticExpr
    right: AnalyticExpr


@dataclass(frozen=True, slots=True)
class Product:
    left: AnalyticExpr
    right: AnalyticExpr


@dataclass(frozen=True, slots=True)
class Quotient:
    numerator: AnalyticExpr
    denominator: AnalyticExpr


@dataclass(frozen=True, slots=True)
class Power:
    """Integer power; the exponent is never negative."""

    base: AnalyticExpr
    exponent: int

    def __post_init__(self) -> None:
        """Reject negative exponents."""
        if self.exponent < 0:
            msg = f"Power exponent must be >= 0, got {self.exponent}"
            raise ValueError(msg)


@dataclass(frozen=True, slots=True)
class Negation:
    operand: AnalyticExpr


@dataclass(frozen=True, slots=True)
class Call:
    function: FunctionName
    argument: AnalyticExpr


type AnalyticExpr = (
    Constant | Variable | Sum | Difference | Product | Quotient | Power | Negation | Call
)

ZERO = Constant(0.0)
ONE = Constant(1.0)
T = Variable()


def constant(value: float) -> Constant:
    """Wrap a float as a constant node."""
    return Constant(float(value))


def _value(node: AnalyticExpr) -> float | None:
    return node.value if isinstance(node, Constant) else None


def add(left: AnalyticExpr, right: AnalyticExpr) -> AnalyticExpr:
    """Return ``left + right``."""
    a, b = _value(left), _value(right)
    if a is not None and b is not None:
        return Constant(a + b)
    if a == 0.0:
        return right
    if b == 0.0:
        return left
    return Sum(left, right)


def sub(left: AnalyticExpr, right: AnalyticExpr) -> AnalyticExpr:
    """Return ``left - right``."""
    a, b = _value(left), _value(right)
    if a is not None and b is not None:
        return Constant(a - b)
    if b == 0.0:
        return left
    if a == 0.0:
        return neg(right)
    return Difference(left, right)


def mul(left: AnalyticExpr, right: AnalyticExpr) -> AnalyticExpr:
    """Return ``left * right``."""
    a, b = _value(left), _value(right)
    if a is not None and b is not None:
        return Constant(a * b)
    if a == 0.0 or b == 0.0:
        return ZERO
    if a == 1.0:
        return right
    if b == 1.0:
        return left
    if a == -1.0:
        return neg(right)
    if b == -1.0:
        return neg(left)
    return Product(left, right)


def div(numerator: AnalyticExpr, denominator: AnalyticExpr) -> AnalyticExpr:
    """Return ``numerator / denominator``; a constant zero denominator is kept for evaluation."""
    a, b = _value(numerator), _value(denominator)
    if a is not None and b is not None and b != 0.0:
        return Constant(a / b)
    if b == 1.0:
        return numerator
    if a == 0.0 and b != 0.0:
        return ZERO
    return Quotient(numerator, denominator)


def neg(operand: AnalyticExpr) -> AnalyticExpr:
    """Return ``-operand``."""
    a = _value(operand)
    if a is not None:
        return Constant(-a)
    if isinstance(operand, Negation):
        return operand.operand
    return Negation(operand)


def power(base: AnalyticExpr, exponent: int) -> AnalyticExpr:
    """Return ``base ** exponent``."""
    if exponent == 0:
        return ONE
    if exponent == 1:
        return base
    a = _value(base)
    if a is not None:
        return Constant(a**exponent)
    return Power(base, exponent)


def call(function: FunctionName, argument: AnalyticExpr) -> AnalyticExpr:
    """Apply a built-in function, folding constant real arguments where the value stays real."""
    a = _value(argument)
    if a is None or (function == "sqrt" and a < 0.0):
        return Call(function, argument)
    return Constant(getattr(math, function)(a))


def contains_sqrt(expr: AnalyticExpr) -> bool:
    """Return True when any node of ``expr`` is a square root."""
    match expr:
        case Constant() | Variable():
            return False
        case Call(function="sqrt"):
            return True
        case Call(argument=argument):
            return contains_sqrt(argument)
        case Negation(operand=operand) | Power(base=operand):
            return contains_sqrt(operand)
        case Quotient(numerator=left, denominator=right):
            return contains_sqrt(left) or contains_sqrt(right)
        case Sum(left=left, right=right) | Difference(left=left, right=right):
            return contains_sqrt(left) or contains_sqrt(right)
        case Product(left=left, right=right):
            return contains_sqrt(left) or contains_sqrt(right)
