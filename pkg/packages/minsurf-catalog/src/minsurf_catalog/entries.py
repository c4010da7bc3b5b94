"""Strips named in the catalog: CPG pairs, Enneper's cubic, the weak-CPG family and lines."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from minsurf_analytic import parse_expr
from minsurf_bjorling import AnalyticCurve, DomainGrid, make_planar_strip, make_strip

from minsurf_catalog.entry import CatalogEntry, ExpectedProperties, StripSources
from minsurf_catalog.exceptions import CatalogParameterError
from minsurf_catalog.registry import CatalogRegistry, registry

if TYPE_CHECKING:
    from collections.abc import Mapping

HALF_PI = math.pi / 2
# Grids keep this fraction of the distance to the nearest zero of |c'|^2.
BRANCH_MARGIN = 0.7


def _number(value: float) -> str:
    text = repr(float(value))
    return f"({text})" if value < 0 else text


def _positive(name: str, parameters: Mapping[str, float], key: str) -> float:
    value = parameters[key]
    if value <= 0:
        msg = f"{name}: parameter {key} must be positive, got {value}"
        raise CatalogParameterError(msg, name=name, parameter=key)
    return value


def _planar_entry(  # noqa: PLR0913
    name: str,
    x: str,
    y: str,
    grid: DomainGrid,
    parameters: Mapping[str, float],
    *,
    oracle: str | None = None,
    expected: ExpectedProperties | None = None,
    cpg_partner: str | None = None,
    description: str = "",
) -> CatalogEntry:
    curve = AnalyticCurve.from_sources(x, y)
    return CatalogEntry(
        name=name,
        strip=make_planar_strip(curve, HALF_PI),
        sources=StripSources(x=x, y=y, phi=HALF_PI),
        grid=grid,
        parameters=dict(parameters),
        oracle=oracle,
        expected=expected or ExpectedProperties(),
        cpg_partner=cpg_partner,
        description=description,
    )


def _explicit_entry(
    name: str,
    x: str,
    normal: tuple[str, str, str],
    grid: DomainGrid,
    *,
    oracle: str,
    description: str,
) -> CatalogEntry:
    curve = AnalyticCurve.from_sources(x, "0")
    strip = make_strip(curve, (parse_expr(normal[0]), parse_expr(normal[1]), parse_expr(normal[2])))
    return CatalogEntry(
        name=name,
        strip=strip,
        sources=StripSources(x=x, y="0", normal=normal),
        grid=grid,
        oracle=oracle,
        description=description,
    )


def circle(parameters: Mapping[str, float]) -> CatalogEntry:
    r = _positive("circle", parameters, "r")
    return _planar_entry(
        "circle",
        f"{_number(r)}*cos(t)",
        f"{_number(r)}*sin(t)",
        DomainGrid.build((-math.pi, math.pi), (-1.0, 1.0), 41, 41),
        parameters,
        oracle="catenoid" if r == 1.0 else None,
        expected=ExpectedProperties(self_cpg=False, self_adjoint=False),
        cpg_partner="catenary",
        description="circle; its Björling surface is the catenoid",
    )


def catenary(parameters: Mapping[str, float]) -> CatalogEntry:
    # |c'|^2 = cosh(t)^2 vanishes at t = i pi/2.
    half = BRANCH_MARGIN * HALF_PI
    return _planar_entry(
        "catenary",
        "cosh(t)",
        "t",
        DomainGrid.build((-1.0, 1.0), (-half, half), 41, 41),
        parameters,
        expected=ExpectedProperties(self_cpg=False),
        cpg_partner="circle",
        description="catenary; CPG partner of the circle",
    )


def parabola(parameters: Mapping[str, float]) -> CatalogEntry:
    a = _positive("parabola", parameters, "a")
    # |c'|^2 = 4 a^2 t^2 + 1 vanishes at t = i / (2a).
    half = min(0.9, 0.9 / (2 * a))
    return _planar_entry(
        "parabola",
        f"{_number(a)}*t^2",
        "t",
        DomainGrid.build((-1.0, 1.0), (-half, half), 41, 41),
        parameters,
        expected=ExpectedProperties(self_cpg=False, self_adjoint=False),
        cpg_partner="cycloid",
        description="parabola; its Björling surface is Catalan's surface",
    )


def cycloid(parameters: Mapping[str, float]) -> CatalogEntry:
    # |c'|^2 = 2 + 2 cos(t) vanishes at t = pi.
    return _planar_entry(
        "cycloid",
        "1 + cos(t)",
        "t + sin(t)",
        DomainGrid.build((-2.0, 2.0), (-1.0, 1.0), 41, 41),
        parameters,
        expected=ExpectedProperties(self_cpg=False),
        cpg_partner="parabola",
        description="cycloid with its vertex on the X-axis; CPG partner of the parabola",
    )


def ellipse(parameters: Mapping[str, float]) -> CatalogEntry:
    a = _positive("ellipse", parameters, "a")
    b = _positive("ellipse", parameters, "b")
    half = 1.0
    if a != b:
        # |c'|^2 = a^2 sin^2 + b^2 cos^2 vanishes at t = i artanh(min / max).
        half = min(1.0, BRANCH_MARGIN * math.atanh(min(a, b) / max(a, b)))
    return _planar_entry(
        "ellipse",
        f"{_number(a)}*cos(t)",
        f"{_number(b)}*sin(t)",
        DomainGrid.build((-math.pi, math.pi), (-half, half), 41, 41),
        parameters,
        expected=ExpectedProperties(self_cpg=False, self_adjoint=False),
        cpg_partner="elliptical_roulette",
        description="ellipse; its CPG partner is an elliptical roulette computed numerically",
    )


def enneper_cubic(parameters: Mapping[str, float]) -> CatalogEntry:
    return _planar_entry(
        "enneper_cubic",
        "t^2",
        "t^3/3 - t",
        DomainGrid.build((-1.0, 1.0), (-1.0, 1.0), 41, 41),
        parameters,
        oracle="enneper",
        expected=ExpectedProperties(
            self_cpg=True, self_adjoint=True, weak_cpg_order=2, dihedral_order=4
        ),
        cpg_partner="enneper_cubic",
        description="cubic (t^2, t^3/3 - t); its Björling surface is Enneper's surface",
    )


def weak_cpg(parameters: Mapping[str, float]) -> CatalogEntry:
    k = parameters["k"]
    if k < 1 or k != int(k):
        msg = f"weak_cpg: k must be an integer >= 1, got {k}"
        raise CatalogParameterError(msg, name="weak_cpg", parameter="k")
    m = 4 * int(k) - 2
    degree = 2 * m - 1
    return _planar_entry(
        "weak_cpg",
        f"(2/{m})*t^{m}",
        f"t^{degree}/{degree} - t",
        DomainGrid.build((-1.0, 1.0), (-1.0, 1.0), 41, 41),
        parameters,
        expected=ExpectedProperties(self_cpg=True, weak_cpg_order=m, dihedral_order=2 * m),
        cpg_partner="weak_cpg",
        description=f"weak CPG curve with m = {m}",
    )


def line_rotating_normal(parameters: Mapping[str, float]) -> CatalogEntry:  # noqa: ARG001
    return _explicit_entry(
        "line_rotating_normal",
        "t",
        ("0", "cos(t)", "sin(t)"),
        DomainGrid.build((-math.pi, math.pi), (-1.0, 1.0), 41, 41),
        oracle="helicoid",
        description="straight line with a normal turning about it; gives the helicoid",
    )


def plane_line(parameters: Mapping[str, float]) -> CatalogEntry:  # noqa: ARG001
    return _explicit_entry(
        "plane_line",
        "t",
        ("0", "0", "1"),
        DomainGrid.build((-1.0, 1.0), (-1.0, 1.0), 11, 11),
        oracle="plane",
        description="straight line with a constant normal; gives the plane",
    )


def register_builtins(target: CatalogRegistry) -> None:
    target.register("circle", circle, {"r": 1.0}, "circle of radius r")
    target.register("catenary", catenary, {}, "catenary (cosh t, t)")
    target.register("parabola", parabola, {"a": 0.5}, "parabola (a t^2, t)")
    target.register("cycloid", cycloid, {}, "cycloid (1 + cos t, t + sin t)")
    target.register("ellipse", ellipse, {"a": 1.0, "b": 0.6}, "ellipse (a cos t, b sin t)")
    target.register("enneper_cubic", enneper_cubic, {}, "cubic (t^2, t^3/3 - t)")
    target.register("weak_cpg", weak_cpg, {"k": 1.0}, "weak CPG family, m = 4k - 2")
    target.register(
        "line_rotating_normal", line_rotating_normal, {}, "line with normal (0, cos t, sin t)"
    )
    target.register("plane_line", plane_line, {}, "line with constant normal e_z")


register_builtins(registry)
