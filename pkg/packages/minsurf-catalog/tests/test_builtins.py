"""Catalog entries against closed forms and their recorded symmetry verdicts."""

from __future__ import annotations

import numpy as np
import pytest
from minsurf_bjorling import SurfacePatch, evaluate_patch, validate_strip
from minsurf_catalog import CatalogEntry, UnknownCatalogEntryError, builtin, closed_form
from minsurf_symmetry import self_adjoint_test, self_cpg_test

ORACLE_ENTRIES = ["circle", "enneper_cubic", "line_rotating_normal", "plane_line"]


def _patch(entry: CatalogEntry, resolution: int = 21) -> SurfacePatch:
    return evaluate_patch(entry.strip, entry.grid.with_resolution(resolution, resolution))


class TestOracles:
    @pytest.mark.parametrize("name", ORACLE_ENTRIES)
    def test_patch_matches_closed_form(self, name: str) -> None:
        entry = builtin(name)
        assert entry.oracle is not None
        patch = _patch(entry)
        u, v = np.meshgrid(patch.grid.u, patch.grid.v, indexing="ij")
        np.testing.assert_allclose(patch.x, closed_form(entry.oracle)(u, v), atol=1e-8)

    def test_unknown_oracle(self) -> None:
        with pytest.raises(UnknownCatalogEntryError):
            closed_form("costa")

    def test_enneper_oracle_is_polynomial(self) -> None:
        point = closed_form("enneper")(1.0, 0.0)
        np.testing.assert_allclose(point, [1.0, -2.0 / 3.0, 0.0], atol=1e-15)


class TestStrips:
    @pytest.mark.parametrize("name", ["catenary", "cycloid", "ellipse", "parabola", "weak_cpg"])
    def test_planar_strips_validate(self, name: str) -> None:
        entry = builtin(name)
        assert entry.strip.planar
        assert validate_strip(entry.strip, interval=entry.grid.u_range).passes

    def test_explicit_strip_keeps_normal_sources(self) -> None:
        entry = builtin("line_rotating_normal")
        assert entry.sources.normal == ("0", "cos(t)", "sin(t)")
        assert entry.sources.phi is None

    def test_partners_are_mutual(self) -> None:
        assert builtin("circle").cpg_partner == "catenary"
        assert builtin("catenary").cpg_partner == "circle"
        assert builtin("parabola").cpg_partner == "cycloid"
        assert builtin("cycloid").cpg_partner == "parabola"


class TestExpectedVerdicts:
    @pytest.mark.parametrize("name", ["circle", "enneper_cubic", "parabola"])
    def test_self_cpg(self, name: str) -> None:
        entry = builtin(name)
        report = self_cpg_test(_patch(entry))
        assert report.passes is entry.expected.self_cpg

    def test_enneper_self_adjoint(self) -> None:
        entry = builtin("enneper_cubic")
        result = self_adjoint_test(_patch(entry))
        assert result.report.passes is entry.expected.self_adjoint
