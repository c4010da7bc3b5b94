"""Tests for adaptive line quadrature."""

from __future__ import annotations

import cmath
import math

import numpy as np
import pytest
from minsurf_analytic import BranchTracker, evaluate_many, parse_expr
from minsurf_bjorling import QuadratureError, integrate_line


def expression_field(*sources: str):  # noqa: ANN201
    exprs = [parse_expr(source) for source in sources]

    def field(points: np.ndarray, tracker: BranchTracker) -> np.ndarray:
        return evaluate_many(exprs, points, tracker)

    return field


class TestIntegrateLine:
    """Cumulative integrals along straight segments."""

    def test_exponential_on_real_segment(self) -> None:
        result = integrate_line(
            expression_field("exp(t)"), 0.0, 1.0, [0.0, 0.5, 1.0], 1e-12, n_integrated=1
        )
        np.testing.assert_allclose(
            result.integrals[0], [0.0, math.exp(0.5) - 1, math.e - 1], rtol=1e-14
        )

    def test_cosine_along_imaginary_axis(self) -> None:
        result = integrate_line(expression_field("cos(t)"), 0.0, 1j, [0.0, 1.0], 1e-12, n_integrated=1)
        assert result.integrals[0, -1] == pytest.approx(1j * math.sinh(1.0), abs=1e-14)

    def test_batched_origins(self) -> None:
        origins = np.array([0.0, 1.0j, -1.0 + 0.5j])
        result = integrate_line(
            expression_field("t^2"), origins, 1.0, [0.0, 2.0], 1e-12, n_integrated=1
        )
        expected = ((origins + 2) ** 3 - origins**3) / 3
        np.testing.assert_allclose(result.integrals[0, :, -1], expected, rtol=1e-13)

    def test_samples_at_breakpoints(self) -> None:
        result = integrate_line(
            expression_field("t", "t^2"), 0.0, 1.0, [0.0, 0.25, 1.0], 1e-12, n_integrated=1
        )
        np.testing.assert_allclose(result.samples[1], [0.0, 0.0625, 1.0])

    def test_sqrt_is_continued_along_the_path(self) -> None:
        start, end = 1.0 + 0j, -1.0 + 0.5j
        result = integrate_line(
            expression_field("sqrt(t)"),
            start,
            end - start,
            np.linspace(0.0, 1.0, 11),
            1e-12,
            n_integrated=1,
        )
        expected = 2 / 3 * (cmath.sqrt(end) ** 3 - 1)
        assert result.integrals[0, -1] == pytest.approx(expected, abs=1e-12)

    def test_tracker_restarts_at_breakpoints(self) -> None:
        result = integrate_line(
            expression_field("sqrt(t)"), 1.0, -2.0 + 1e-3j, [0.0, 1.0], 1e-10, n_integrated=1
        )
        restarted = result.tracker.restart_at([1])
        values = evaluate_many([parse_expr("sqrt(t)")], np.array([[-1.0 - 0.001j]]), restarted)
        assert values[0, 0, 0].imag > 0

    def test_refines_until_converged(self) -> None:
        result = integrate_line(
            expression_field("exp(8*t)"), 0.0, 1.0, [0.0, 4.0], 1e-12, n_integrated=1
        )
        assert result.levels > 0
        assert result.integrals[0, -1] == pytest.approx((math.exp(32.0) - 1) / 8, rel=1e-12)

    def test_gives_up_after_max_levels(self) -> None:
        with pytest.raises(QuadratureError) as excinfo:
            integrate_line(
                expression_field("exp(20*t)"),
                0.0,
                1.0,
                [0.0, 5.0],
                1e-14,
                n_integrated=1,
                max_levels=0,
            )
        assert excinfo.value.levels == 0

    def test_rejects_breakpoints_not_starting_at_zero(self) -> None:
        with pytest.raises(ValueError, match="starting at 0"):
            integrate_line(expression_field("t"), 0.0, 1.0, [0.5, 1.0], 1e-10, n_integrated=1)
