"""Analytic expression engine for minsurf."""

from minsurf_analytic.differentiate import differentiate
from minsurf_analytic.evaluate import BranchTracker, evaluate, evaluate_many
from minsurf_analytic.exceptions import (
    AnalyticDivisionError,
    AnalyticError,
    BranchPointError,
    BranchTrackingRequiredError,
    ExpressionSyntaxError,
    InvalidExponentError,
    UnknownIdentifierError,
)
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
    contains_sqrt,
    div,
    mul,
    neg,
    power,
    sub,
)
from minsurf_analytic.parser import parse_expr, to_source
from minsurf_analytic.polynomial import from_polynomial, polynomial_sqrt, to_polynomial

__all__ = [
    "ONE",
    "ZERO",
    "AnalyticDivisionError",
    "AnalyticError",
    "AnalyticExpr",
    "BranchPointError",
    "BranchTracker",
    "BranchTrackingRequiredError",
    "Call",
    "Constant",
    "Difference",
    "ExpressionSyntaxError",
    "InvalidExponentError",
    "Negation",
    "Power",
    "Product",
    "Quotient",
    "Sum",
    "UnknownIdentifierError",
    "Variable",
    "add",
    "call",
    "constant",
    "contains_sqrt",
    "differentiate",
    "div",
    "evaluate",
    "evaluate_many",
    "from_polynomial",
    "mul",
    "neg",
    "parse_expr",
    "polynomial_sqrt",
    "power",
    "sub",
    "to_polynomial",
    "to_source",
]
