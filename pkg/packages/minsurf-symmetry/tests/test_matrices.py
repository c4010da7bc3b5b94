"""Tests for the dihedral matrices and domain maps."""

from __future__ import annotations

import math

import numpy as np
import pytest
from minsurf_symmetry import (
    LAMBDA,
    LAMBDA_DOMAIN,
    R,
    R_REAL,
    RHO_DOMAIN,
    T,
    dihedral_group,
    lam,
    rho,
    tau,
    weak_cpg_generator,
    yz_angle,
    yz_rotation,
)


class TestGroupIdentities:
    """Relations between T, Λ and R."""

    def test_involution_and_order_four(self) -> None:
        np.testing.assert_allclose(T @ T, np.eye(3), atol=1e-15)
        np.testing.assert_allclose(np.linalg.matrix_power(LAMBDA, 4), np.eye(3), atol=1e-15)

    def test_conjugating_lambda_by_t_inverts_it(self) -> None:
        np.testing.assert_allclose(T @ LAMBDA @ T, np.linalg.inv(LAMBDA), atol=1e-15)

    def test_r_squares_to_lambda(self) -> None:
        np.testing.assert_allclose(R @ R, LAMBDA, atol=1e-15)

    def test_rho_squares_to_lambda(self) -> None:
        assert abs(RHO_DOMAIN**2 - LAMBDA_DOMAIN) <= 1e-15
        assert abs(rho(rho(1.0 + 0.5j)) - lam(1.0 + 0.5j)) <= 1e-15

    def test_real_form_is_a_rotation(self) -> None:
        np.testing.assert_allclose(R_REAL.T @ R_REAL, np.eye(3), atol=1e-15)
        np.testing.assert_allclose(R_REAL, yz_rotation(math.pi / 4), atol=1e-15)

    def test_group_has_sixteen_distinct_elements(self) -> None:
        elements = list(dihedral_group().values())
        assert len(elements) == 16
        for i, first in enumerate(elements):
            for second in elements[i + 1 :]:
                assert np.abs(first - second).max() > 0.5

    def test_tau_conjugates(self) -> None:
        assert tau(1.0 + 2.0j) == 1.0 - 2.0j


class TestWeakGenerator:
    """``Λ_k`` rotates the yz block by ``pi / (2n)``."""

    def test_angle_for_k_one(self) -> None:
        assert yz_angle(weak_cpg_generator(1)) == pytest.approx(math.pi / 8)

    def test_angle_for_k_two(self) -> None:
        generator = weak_cpg_generator(2)
        assert generator[0, 0] == -1.0
        assert yz_angle(generator) == pytest.approx(math.pi / 12)

    def test_rejects_k_below_one(self) -> None:
        with pytest.raises(ValueError, match="at least 1"):
            weak_cpg_generator(0)

    def test_yz_angle_of_lambda(self) -> None:
        assert yz_angle(LAMBDA) == pytest.approx(math.pi / 2)

    def test_yz_angle_is_none_when_x_mixes(self) -> None:
        mixing = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
        assert yz_angle(mixing) is None
