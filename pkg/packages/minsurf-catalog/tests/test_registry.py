"""Tests for the catalog registry."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import pytest
from minsurf_catalog import (
    CatalogParameterError,
    CatalogRegistry,
    UnknownCatalogEntryError,
    builtin,
    registry,
)
from minsurf_catalog.entries import circle

if TYPE_CHECKING:
    from collections.abc import Mapping

    from minsurf_catalog import CatalogEntry

BUILTIN_NAMES = [
    "catenary",
    "circle",
    "cycloid",
    "ellipse",
    "enneper_cubic",
    "line_rotating_normal",
    "parabola",
    "plane_line",
    "weak_cpg",
]


class TestGlobalRegistry:
    def test_lists_builtins(self) -> None:
        assert registry.list_entries() == BUILTIN_NAMES

    @pytest.mark.parametrize("name", BUILTIN_NAMES)
    def test_every_builtin_builds_with_defaults(self, name: str) -> None:
        entry = builtin(name)
        assert entry.name == name
        assert entry.grid.symmetric

    def test_unknown_entry_lists_available(self) -> None:
        with pytest.raises(UnknownCatalogEntryError) as exc_info:
            builtin("hyperbola")
        assert exc_info.value.name == "hyperbola"
        assert "circle" in str(exc_info.value)

    def test_unknown_parameter(self) -> None:
        with pytest.raises(CatalogParameterError, match="radius"):
            builtin("circle", radius=2.0)

    def test_non_finite_parameter(self) -> None:
        with pytest.raises(CatalogParameterError, match="finite"):
            builtin("parabola", a=math.inf)

    def test_defaults_and_description(self) -> None:
        assert registry.defaults("ellipse") == {"a": 1.0, "b": 0.6}
        assert "ellipse" in registry.description("ellipse")
        with pytest.raises(UnknownCatalogEntryError):
            registry.defaults("missing")


class TestParameterValidation:
    def test_circle_radius_must_be_positive(self) -> None:
        with pytest.raises(CatalogParameterError, match="positive"):
            builtin("circle", r=0.0)

    @pytest.mark.parametrize("k", [0.0, 1.5, -2.0])
    def test_weak_cpg_needs_positive_integer(self, k: float) -> None:
        with pytest.raises(CatalogParameterError, match="integer"):
            builtin("weak_cpg", k=k)

    def test_weak_cpg_exponents(self) -> None:
        entry = builtin("weak_cpg", k=2)
        assert entry.sources.x == "(2/6)*t^6"
        assert entry.sources.y == "t^11/11 - t"
        assert entry.expected.weak_cpg_order == 6
        assert entry.expected.dihedral_order == 12

    def test_only_unit_circle_has_an_oracle(self) -> None:
        assert builtin("circle").oracle == "catenoid"
        assert builtin("circle", r=2.0).oracle is None

    def test_parabola_grid_shrinks_with_curvature(self) -> None:
        assert builtin("parabola", a=2.0).grid.v_range == pytest.approx((-0.225, 0.225))

    def test_ellipse_grid_avoids_branch_points(self) -> None:
        grid = builtin("ellipse").grid
        assert grid.v_range[1] < math.atanh(0.6)
        assert builtin("ellipse", a=1.0, b=1.0).grid.v_range == (-1.0, 1.0)


class TestCustomRegistry:
    def test_register_and_build(self) -> None:
        local = CatalogRegistry()
        seen: list[Mapping[str, float]] = []

        def factory(parameters: Mapping[str, float]) -> CatalogEntry:
            seen.append(parameters)
            return circle(parameters)

        local.register("ring", factory, {"r": 1.0}, "unit ring")
        entry = local.build("ring", {"r": 3.0})
        assert seen == [{"r": 3.0}]
        assert entry.parameters == {"r": 3.0}
        assert local.list_entries() == ["ring"]

    def test_empty_registry_reports_none(self) -> None:
        with pytest.raises(UnknownCatalogEntryError, match="none"):
            CatalogRegistry().build("ring")
