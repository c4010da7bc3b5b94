"""Tests for CPG extraction, the self-CPG relation and the diagonal lines."""

from __future__ import annotations

import math

import numpy as np
import pytest
from minsurf_bjorling import DomainGrid, Strip, SurfacePatch, evaluate_patch, transform_strip
from minsurf_symmetry import (
    CpgPlanarityError,
    GridSymmetryError,
    adjoint_cpg_test,
    diagonal_line_test,
    extract_cpg,
    self_cpg_test,
    yz_rotation,
)

CATALOG_PATCHES = ["catenoid_patch", "enneper_patch", "parabola_patch", "plane_patch"]


class TestExtractCpg:
    """``ĉ(t) = X(it)``."""

    def test_circle_gives_catenary(self, catenoid_patch: SurfacePatch) -> None:
        cpg = extract_cpg(catenoid_patch)
        t = cpg.parameters
        expected = np.stack([np.cosh(t), np.zeros_like(t), t], axis=-1)
        np.testing.assert_allclose(cpg.points, expected, atol=1e-8)
        assert cpg.report.symmetry_residual <= 1e-10
        assert cpg.report.tangent_residual <= 1e-10
        assert not cpg.report.degenerate
        np.testing.assert_allclose(cpg.report.vertex_point, (1.0, 0.0, 0.0), atol=1e-12)

    def test_enneper_cpg(self, enneper_patch: SurfacePatch) -> None:
        cpg = extract_cpg(enneper_patch, t_samples=21)
        t = cpg.parameters
        expected = np.stack([-(t**2), np.zeros_like(t), t - t**3 / 3], axis=-1)
        np.testing.assert_allclose(cpg.points, expected, atol=1e-10)

    def test_parabola_cpg_is_planar_and_symmetric(self, parabola_patch: SurfacePatch) -> None:
        cpg = extract_cpg(parabola_patch)
        assert cpg.planarity_residual <= 1e-8
        assert cpg.report.symmetry_residual <= 1e-8
        assert not cpg.report.degenerate

    def test_even_sample_count_still_contains_vertex(self, enneper_patch: SurfacePatch) -> None:
        cpg = extract_cpg(enneper_patch, t_samples=10)
        assert cpg.parameters.size == 11
        assert cpg.parameters[5] == 0.0

    def test_rotated_strip_leaves_the_plane(self, circle_strip: Strip) -> None:
        tilted = transform_strip(circle_strip, yz_rotation(math.pi / 6))
        patch = evaluate_patch(tilted, DomainGrid.build((-1.0, 1.0), (-1.0, 1.0), 5, 5))
        with pytest.raises(CpgPlanarityError):
            extract_cpg(patch)

    def test_grid_without_imaginary_axis(self, circle_strip: Strip) -> None:
        patch = evaluate_patch(circle_strip, DomainGrid.build((0.5, 1.0), (-1.0, 1.0), 3, 3))
        with pytest.raises(GridSymmetryError):
            extract_cpg(patch)


class TestSelfCpg:
    """``X(it) = s Λ X(σt)``."""

    def test_enneper_is_self_cpg(self, enneper_patch: SurfacePatch) -> None:
        report = self_cpg_test(enneper_patch)
        assert report.passes
        assert report.residual <= 1e-10
        assert (report.sigma, report.sign) == (-1, 1)

    def test_catenoid_is_not(self, catenoid_patch: SurfacePatch) -> None:
        report = self_cpg_test(catenoid_patch)
        assert not report.passes
        assert report.details["raw_residual"] >= 0.5  # type: ignore[operator]

    def test_plane_is_not_applicable(self, plane_patch: SurfacePatch) -> None:
        report = self_cpg_test(plane_patch)
        assert not report.applicable
        assert not report.passes
        assert report.residual == math.inf


class TestDiagonalLines:
    """Images of the diagonals ``t ± it``."""

    def test_enneper_diagonals(self, enneper_patch: SurfacePatch) -> None:
        report = diagonal_line_test(enneper_patch)
        assert report.passes
        assert report.residual <= 1e-10
        assert report.orientation == "t+it->(0,y,-y)"
        assert report.details["direction_cosine"] == pytest.approx(0.0, abs=1e-10)

    def test_enneper_diagonal_values(self, enneper_patch: SurfacePatch) -> None:
        t = np.linspace(-1.0, 1.0, 9)
        points = enneper_patch.source.values((1 + 1j) * t).f.real
        height = 2 * t**3 / 3 + t
        expected = np.stack([np.zeros_like(t), -height, height], axis=-1)
        np.testing.assert_allclose(points, expected, atol=1e-12)

    def test_catenoid_diagonal_leaves_the_lines(self, catenoid_patch: SurfacePatch) -> None:
        point = catenoid_patch.source.values(np.array([1 + 1j])).f.real[0]
        assert point[0] == pytest.approx(math.cos(1.0) * math.cosh(1.0), abs=1e-10)
        assert not diagonal_line_test(catenoid_patch).passes

    @pytest.mark.parametrize("name", CATALOG_PATCHES)
    def test_agrees_with_self_cpg(self, name: str, request: pytest.FixtureRequest) -> None:
        patch: SurfacePatch = request.getfixturevalue(name)
        assert self_cpg_test(patch).passes == diagonal_line_test(patch).passes


class TestAdjointCpg:
    """Diagonal curves of the adjoint of a self-CPG surface."""

    def test_enneper_adjoint_diagonals(self, enneper_patch: SurfacePatch) -> None:
        report = adjoint_cpg_test(enneper_patch)
        assert report.passes
        assert report.details["planarity"] <= 1e-8  # type: ignore[operator]
        assert report.details["tangent_cosine"] == pytest.approx(0.0, abs=1e-12)
        assert (report.sigma, report.sign) == (1, 1)

    def test_enneper_adjoint_curve_values(self, enneper_patch: SurfacePatch) -> None:
        t = np.linspace(-1.0, 1.0, 9)
        points = enneper_patch.source.adjoint().values((1 + 1j) * t).f.real
        cubic = 2 * t**3 / 3 - t
        expected = np.stack([2 * t**2, cubic, cubic], axis=-1)
        np.testing.assert_allclose(points, expected, atol=1e-12)

    def test_catenoid_fails(self, catenoid_patch: SurfacePatch) -> None:
        assert not adjoint_cpg_test(catenoid_patch).passes
