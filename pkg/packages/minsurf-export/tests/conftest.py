"""Shared patches for minsurf-export tests."""

from __future__ import annotations

import sys

if __name__ == "tests.conftest":
    module = sys.modules[__name__]
    module.__name__ = "minsurf_export.tests.conftest"
    sys.modules[module.__name__] = module

import pytest
from minsurf_analytic import parse_expr
from minsurf_bjorling import AnalyticCurve, DomainGrid, SurfacePatch, evaluate_patch, make_strip


def _line_patch(x: str, nu: int, nv: int) -> SurfacePatch:
    strip = make_strip(
        AnalyticCurve.from_sources(x, "0"), (parse_expr("0"), parse_expr("0"), parse_expr("1"))
    )
    return evaluate_patch(strip, DomainGrid.build((-1.0, 1.0), (-1.0, 1.0), nu, nv))


@pytest.fixture(scope="session")
def plane_patch() -> SurfacePatch:
    """``X = (u, v, 0)`` with ``N = e_z`` on an 11x7 grid."""
    return _line_patch("t", 11, 7)


@pytest.fixture(scope="session")
def tiny_patch() -> SurfacePatch:
    return _line_patch("t", 2, 2)


@pytest.fixture(scope="session")
def branched_patch() -> SurfacePatch:
    """``X = (u^2 - v^2, 2uv, 0)``, singular at the centre node of a 3x3 grid."""
    return _line_patch("t^2", 3, 3)
