"""Exact conversions between polynomial trees and numpy polynomials."""

from __future__ import annotations

import math

import numpy as np
from numpy.polynomial import Polynomial

from minsurf_analytic.nodes import (
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
    constant,
    mul,
    power,
)
from minsurf_analytic.nodes import T as VARIABLE


def to_polynomial(expr: AnalyticExpr) -> Polynomial | None:  # noqa: PLR0911
    """Return ``expr`` as a polynomial in ``t``, or None when it is not one.

    Quotients count as polynomial only when the denominator reduces to a
    non-zero constant.
    """
    match expr:
        case Constant(value=value):
            return Polynomial([value])
        case Variable():
            return Polynomial([0.0, 1.0])
        case Sum(left=left, right=right) | Difference(left=left, right=right):
            a, b = to_polynomial(left), to_polynomial(right)
            if a is None or b is None:
                return None
            return a + b if isinstance(expr, Sum) else a - b
        case Product(left=left, right=right):
            a, b = to_polynomial(left), to_polynomial(right)
            if a is None or b is None:
                return None
            return a * b
        case Quotient(numerator=numerator, denominator=denominator):
            a, b = to_polynomial(numerator), to_polynomial(denominator)
            if a is None or b is None:
                return None
            b = b.trim()
            if b.degree() != 0 or b.coef[0] == 0.0:
                return None
            return a / float(b.coef[0])
        case Power(base=base, exponent=exponent):
            a = to_polynomial(base)
            return None if a is None else a**exponent
        case Negation(operand=operand):
            a = to_polynomial(operand)
            return None if a is None else -a
        case Call():
            return None


def from_polynomial(coefficients: Polynomial | np.ndarray | list[float]) -> AnalyticExpr:
    """Build the tree ``sum c_k t^k`` from increasing-degree coefficients, skipping zeros."""
    coef = coefficients.coef if isinstance(coefficients, Polynomial) else coefficients
    result: AnalyticExpr = ZERO
    for degree, value in enumerate(np.asarray(coef, dtype=float)):
        if value != 0.0:
            result = add(result, mul(constant(value), power(VARIABLE, degree)))
    return result


def polynomial_sqrt(poly: Polynomial, rtol: float = 1e-12) -> Polynomial | None:
    """Return ``q`` with ``q * q == poly`` and ``q(0) > 0``, if such a polynomial exists.

    The square root is built from the constant term upwards and then checked
    against every coefficient of ``poly`` relative to its largest coefficient.
    """
    a = poly.trim().coef
    degree = len(a) - 1
    if degree % 2 or a[0] <= 0.0:
        return None
    half = degree // 2
    b = np.zeros(half + 1)
    b[0] = math.sqrt(a[0])
    for k in range(1, half + 1):
        cross = float(np.dot(b[1:k], b[k - 1 : 0 : -1]))
        b[k] = (a[k] - cross) / (2.0 * b[0])
    root = Polynomial(b)
    square = (root * root).coef
    size = max(len(square), len(a))
    residual = np.abs(np.pad(square, (0, size - len(square))) - np.pad(a, (0, size - len(a))))
    if residual.max() > rtol * np.abs(a).max():
        return None
    return root
