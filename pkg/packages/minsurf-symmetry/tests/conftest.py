"""Shared strips and patches for minsurf-symmetry tests."""

from __future__ import annotations

import sys

if __name__ == "tests.conftest":
    module = sys.modules[__name__]
    module.__name__ = "minsurf_symmetry.tests.conftest"
    sys.modules[module.__name__] = module

import math

import pytest
from minsurf_analytic import parse_expr
from minsurf_bjorling import (
    AnalyticCurve,
    DomainGrid,
    Strip,
    SurfacePatch,
    evaluate_patch,
    make_planar_strip,
    make_strip,
)


@pytest.fixture(scope="session")
def circle_strip() -> Strip:
    return make_planar_strip(AnalyticCurve.from_sources("cos(t)", "sin(t)"))


@pytest.fixture(scope="session")
def enneper_strip() -> Strip:
    return make_planar_strip(AnalyticCurve.from_sources("t^2", "t^3/3 - t"))


@pytest.fixture(scope="session")
def square_grid() -> DomainGrid:
    return DomainGrid.build((-1.0, 1.0), (-1.0, 1.0), 21, 21)


@pytest.fixture(scope="session")
def catenoid_patch(circle_strip: Strip, square_grid: DomainGrid) -> SurfacePatch:
    return evaluate_patch(circle_strip, square_grid)


@pytest.fixture(scope="session")
def full_catenoid_patch(circle_strip: Strip) -> SurfacePatch:
    grid = DomainGrid.build((-math.pi, math.pi), (-1.0, 1.0), 21, 21)
    return evaluate_patch(circle_strip, grid)


@pytest.fixture(scope="session")
def enneper_patch(enneper_strip: Strip, square_grid: DomainGrid) -> SurfacePatch:
    return evaluate_patch(enneper_strip, square_grid)


@pytest.fixture(scope="session")
def parabola_patch() -> SurfacePatch:
    strip = make_planar_strip(AnalyticCurve.from_sources("0.5*t^2", "t"))
    return evaluate_patch(strip, DomainGrid.build((-1.0, 1.0), (-0.9, 0.9), 21, 21))


@pytest.fixture(scope="session")
def weak_cpg_patch(square_grid: DomainGrid) -> SurfacePatch:
    strip = make_planar_strip(AnalyticCurve.from_sources("(2/6)*t^6", "t^11/11 - t"))
    return evaluate_patch(strip, square_grid)


@pytest.fixture(scope="session")
def plane_patch() -> SurfacePatch:
    curve = AnalyticCurve.from_sources("t", "0")
    strip = make_strip(curve, (parse_expr("0"), parse_expr("0"), parse_expr("1")))
    return evaluate_patch(strip, DomainGrid.build((-1.0, 1.0), (-1.0, 1.0), 11, 11))
