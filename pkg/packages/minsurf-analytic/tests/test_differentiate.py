"""Tests for symbolic differentiation."""

from __future__ import annotations

import numpy as np
import pytest
from minsurf_analytic import (
    BranchTracker,
    Call,
    Negation,
    Variable,
    differentiate,
    evaluate,
    parse_expr,
)

POINTS = np.array([0.3 + 0.7j, -1.1 + 0.2j, 1.4 - 0.9j, 0.5j])


def central_difference(source: str, w: complex, h: float) -> complex:
    expr = parse_expr(source)
    return (evaluate(expr, w + h) - evaluate(expr, w - h)) / (2 * h)


class TestDifferentiate:
    """Derivative rules against closed forms and finite differences."""

    def test_power_rule(self) -> None:
        derivative = differentiate(parse_expr("t^3/3 - t"))
        np.testing.assert_allclose(evaluate(derivative, POINTS), POINTS**2 - 1, rtol=1e-14)

    def test_cosine_gives_negated_sine(self) -> None:
        assert differentiate(parse_expr("cos(t)")) == Negation(Call("sin", Variable()))

    def test_sqrt_chain_rule(self) -> None:
        expr = parse_expr("sqrt(1 + t^2)")
        t = np.linspace(-2.0, 2.0, 41)
        derivative = evaluate(differentiate(expr), t, BranchTracker())
        np.testing.assert_allclose(derivative, t / np.sqrt(1 + t**2), rtol=1e-14)

    def test_quotient_rule(self) -> None:
        derivative = differentiate(parse_expr("sin(t) / (1 + t^2)"))
        w = POINTS
        expected = np.cos(w) / (1 + w**2) - 2 * w * np.sin(w) / (1 + w**2) ** 2
        np.testing.assert_allclose(evaluate(derivative, w), expected, rtol=1e-13)

    def test_constant_derivative_is_zero(self) -> None:
        assert evaluate(differentiate(parse_expr("pi^2 + e")), 1 + 1j) == 0

    @pytest.mark.parametrize("source", ["t^0", "(1 + t)^0", "sqrt(t)^0"])
    def test_zeroth_power_has_zero_derivative(self, source: str) -> None:
        assert evaluate(differentiate(parse_expr(source)), 0.5 + 0.5j) == 0

    def test_zeroth_power_inside_product(self) -> None:
        derivative = differentiate(parse_expr("sin(t)^0 * t"))
        np.testing.assert_allclose(evaluate(derivative, POINTS), np.ones_like(POINTS))

    def test_second_derivative_of_zeroth_power(self) -> None:
        second = differentiate(differentiate(parse_expr("t^0 + t^1")))
        assert evaluate(second, 0.5 + 0.5j) == 0

    @pytest.mark.parametrize(
        ("source", "w"),
        [
            ("exp(t)", 0.2 + 0.4j),
            ("cosh(t) + t^3", 0.5 + 0.5j),
            ("sin(t)", 0.4 + 1.0j),
            ("t^11/11 - t", 0.7 - 0.3j),
        ],
    )
    def test_agrees_with_central_differences_to_second_order(self, source: str, w: complex) -> None:
        exact = evaluate(differentiate(parse_expr(source)), w)
        coarse = abs(central_difference(source, w, 1e-3) - exact)
        fine = abs(central_difference(source, w, 5e-4) - exact)
        assert coarse <= 10 * 1e-6
        assert np.log2(coarse / fine) >= 1.9
