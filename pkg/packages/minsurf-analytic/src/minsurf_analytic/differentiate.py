"""Symbolic differentiation with respect to ``t``."""

from __future__ import annotations

from minsurf_analytic.nodes import (
    ONE,
    ZERO,
    AnalyticExpr,
    Call,
    Constant,
    Difference,
    Negation,
    Power,
    Product,
    Quotient,
    Sum,
    Variable,
    add,
    call,
    constant,
    div,
    mul,
    neg,
    power,
    sub,
)


def differentiate(expr: AnalyticExpr) -> AnalyticExpr:  # noqa: PLR0911
    """Return the exact derivative of ``expr``.

    The result is folded but otherwise unsimplified. The derivative of
    ``sqrt(u)`` divides by the same ``sqrt`` node, so evaluating a function
    together with its derivative continues that root only once.
    """
    match expr:
        case Constant():
            return ZERO
        case Variable():
            return ONE
        case Sum(left=left, right=right):
            return add(differentiate(left), differentiate(right))
        case Difference(left=left, right=right):
            return sub(differentiate(left), differentiate(right))
        case Product(left=left, right=right):
            return add(mul(differentiate(left), right), mul(left, differentiate(right)))
        case Quotient(numerator=numerator, denominator=Constant() as denominator):
            return div(differentiate(numerator), denominator)
        case Quotient(numerator=numerator, denominator=denominator):
            top = sub(
                mul(differentiate(numerator), denominator),
                mul(numerator, differentiate(denominator)),
            )
            return div(top, power(denominator, 2))
        case Power(exponent=0):
            return ZERO
        case Power(base=base, exponent=exponent):
            outer = mul(constant(exponent), power(base, exponent - 1))
            return mul(outer, differentiate(base))
        case Negation(operand=operand):
            return neg(differentiate(operand))
        case Call(function=function, argument=argument):
            return mul(_outer_derivative(expr, function, argument), differentiate(argument))


def _outer_derivative(node: Call, function: str, argument: AnalyticExpr) -> AnalyticExpr:
    match function:
        case "sin":
            return call("cos", argument)
        case "cos":
            return neg(call("sin", argument))
        case "sinh":
            return call("cosh", argument)
        case "cosh":
            return call("sinh", argument)
        case "exp":
            return node
        case _:
            return div(ONE, mul(constant(2.0), node))
