"""Shared strips and patches for minsurf-bjorling tests."""

from __future__ import annotations

import sys

if __name__ == "tests.conftest":
    module = sys.modules[__name__]
    module.__name__ = "minsurf_bjorling.tests.conftest"
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
def helicoid_strip() -> Strip:
    curve = AnalyticCurve.from_sources("t", "0")
    return make_strip(curve, (parse_expr("0"), parse_expr("cos(t)"), parse_expr("sin(t)")))


@pytest.fixture(scope="session")
def plane_strip() -> Strip:
    curve = AnalyticCurve.from_sources("t", "0")
    return make_strip(curve, (parse_expr("0"), parse_expr("0"), parse_expr("1")))


@pytest.fixture(scope="session")
def catenoid_grid() -> DomainGrid:
    return DomainGrid.build((0.0, 2 * math.pi), (-1.0, 1.0), 101, 101)


@pytest.fixture(scope="session")
def square_grid() -> DomainGrid:
    return DomainGrid.build((-1.0, 1.0), (-1.0, 1.0), 41, 41)


@pytest.fixture(scope="session")
def catenoid_patch(circle_strip: Strip, catenoid_grid: DomainGrid) -> SurfacePatch:
    return evaluate_patch(circle_strip, catenoid_grid)


@pytest.fixture(scope="session")
def enneper_patch(enneper_strip: Strip, square_grid: DomainGrid) -> SurfacePatch:
    return evaluate_patch(enneper_strip, square_grid)


@pytest.fixture(scope="session")
def plane_patch(plane_strip: Strip) -> SurfacePatch:
    return evaluate_patch(plane_strip, DomainGrid.build((-1.0, 1.0), (-1.0, 1.0), 11, 11))
