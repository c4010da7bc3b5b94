"""Named check suites turning symmetry and geometry reports into report records."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Protocol

from minsurf_bjorling import (
    SurfacePatch,
    evaluate_patch,
    laplacian_residual,
    minimality_report,
    validate_strip,
)
from minsurf_logging import get_logger
from minsurf_symmetry import (
    CpgPlanarityError,
    GridSymmetryError,
    adjoint_cpg_test,
    axis_rotation_check,
    d4_d8_test,
    diagonal_line_test,
    dihedral_search,
    reflection_checks,
    self_adjoint_test,
    self_cpg_test,
    straight_arc_test,
)

if TYPE_CHECKING:
    from minsurf_bjorling import Strip

logger = get_logger("cli.suites")

type Record = dict[str, object]

HALF_PI = math.pi / 2
# Relative slack on the expected O(h^2) decay of the 5-point Laplacian.
CONVERGENCE_SLACK = 0.2
ADVISORY_RELATIONS = frozenset({"rho_literal", "dihedral_search"})


@dataclass(frozen=True)
class Tolerances:
    check: float = 1e-8
    registration: float = 1e-6
    quad: float = 1e-10
    samples: int = 41


@dataclass
class SuiteContext:
    """Inputs shared by every suite of one run; the adjoint is computed once."""

    strip: Strip
    patch: SurfacePatch
    tolerances: Tolerances
    family_k: int | None = None
    max_order: int = 12

    @cached_property
    def adjoint(self) -> SurfacePatch:
        return self.patch.adjoint()

    @property
    def planar_geodesic(self) -> bool:
        return self.strip.planar and self.strip.phi == HALF_PI


@dataclass(frozen=True)
class Suite:
    names: tuple[str, ...]
    run: Callable[[SuiteContext], list[Record]]
    planar_only: bool = False


def _inapplicable(names: tuple[str, ...], reason: str) -> list[Record]:
    return [
        {"name": name, "residual": None, "pass": False, "applicable": False, "reason": reason}
        for name in names
    ]


def _threshold(name: str, value: float, tol: float, **details: object) -> Record:
    record: Record = {"name": name, "residual": value, "tolerance": tol, "pass": value <= tol}
    if details:
        record["details"] = details
    return record


def _strip_suite(ctx: SuiteContext) -> list[Record]:
    tol = ctx.tolerances.check
    validation = validate_strip(ctx.strip, tol=tol, interval=ctx.patch.grid.u_range)
    return [
        {
            "name": "strip_validation",
            "residual": max(validation.unit_norm_max, validation.orthogonality_max),
            "tolerance": tol,
            "pass": validation.passes,
            "details": {
                "unit_norm_max": validation.unit_norm_max,
                "orthogonality_max": validation.orthogonality_max,
                "min_speed": validation.min_speed,
            },
        }
    ]


def laplacian_convergence(ctx: SuiteContext) -> Record:
    """Compare the 5-point Laplacian on the grid and on one with half the intervals.

    A residual already below tolerance passes outright; otherwise the ratio
    must be within ``CONVERGENCE_SLACK`` of the ``(h_coarse / h_fine)^2`` decay.
    """
    tol = ctx.tolerances.check
    grid = ctx.patch.grid
    fine = laplacian_residual(ctx.patch)
    if fine <= tol:
        return _threshold("laplacian_convergence", fine, tol, mode="harmonic")
    coarse_grid = grid.with_resolution((grid.nu - 1) // 2 + 1, (grid.nv - 1) // 2 + 1)
    if coarse_grid.nu < 3 or coarse_grid.nv < 3:  # noqa: PLR2004
        return _threshold("laplacian_convergence", fine, tol, mode="too_coarse")
    coarse = laplacian_residual(
        evaluate_patch(ctx.strip, coarse_grid, quad_tol=ctx.tolerances.quad)
    )
    (hu, hv), (cu, cv) = grid.spacing, coarse_grid.spacing
    expected = (cu * cu + cv * cv) / (hu * hu + hv * hv)
    deviation = abs(coarse / fine / expected - 1.0)
    return _threshold(
        "laplacian_convergence",
        deviation,
        CONVERGENCE_SLACK,
        mode="ratio",
        fine=fine,
        coarse=coarse,
        expected_factor=expected,
    )


def _minimality_suite(ctx: SuiteContext) -> list[Record]:
    tol = ctx.tolerances.check
    report = minimality_report(ctx.patch, ctx.strip)
    return [
        _threshold("isotropy", report.isotropy_max, tol),
        _threshold("conformality", report.conformal_max, tol),
        _threshold("boundary_curve", report.boundary_curve_max, tol),
        _threshold("boundary_normal", report.boundary_normal_max, tol),
        laplacian_convergence(ctx),
    ]


class _Recordable(Protocol):
    def as_record(self) -> dict[str, object]: ...


def _records(*reports: _Recordable) -> list[Record]:
    records: list[Record] = []
    for report in reports:
        record = report.as_record()
        if record["name"] in ADVISORY_RELATIONS:
            record["advisory"] = True
        records.append(record)
    return records


def _reflection_suite(ctx: SuiteContext) -> list[Record]:
    return _records(*reflection_checks(ctx.patch, ctx.tolerances.check))


def _self_cpg_suite(ctx: SuiteContext) -> list[Record]:
    tol = ctx.tolerances
    return _records(self_cpg_test(ctx.patch, tol.check, tol.samples))


def _diagonal_suite(ctx: SuiteContext) -> list[Record]:
    tol = ctx.tolerances
    return _records(diagonal_line_test(ctx.patch, tol.check, tol.samples))


def _adjoint_cpg_suite(ctx: SuiteContext) -> list[Record]:
    tol = ctx.tolerances
    return _records(adjoint_cpg_test(ctx.patch, tol.check, tol.samples))


def _straight_arc_suite(ctx: SuiteContext) -> list[Record]:
    return _records(straight_arc_test(ctx.adjoint, ctx.tolerances.check))


def _axis_rotation_suite(ctx: SuiteContext) -> list[Record]:
    return _records(axis_rotation_check(ctx.adjoint, ctx.tolerances.check))


def _d4_d8_suite(ctx: SuiteContext) -> list[Record]:
    return _records(*d4_d8_test(ctx.patch, ctx.tolerances.check))


def _self_adjoint_suite(ctx: SuiteContext) -> list[Record]:
    return _records(self_adjoint_test(ctx.patch, ctx.tolerances.registration))


def _dihedral_suite(ctx: SuiteContext) -> list[Record]:
    result = dihedral_search(
        ctx.patch, ctx.max_order, tol=ctx.tolerances.registration, family_k=ctx.family_k
    )
    return _records(result)


SUITES: dict[str, Suite] = {
    "strip": Suite(("strip_validation",), _strip_suite),
    "minimality": Suite(
        ("isotropy", "conformality", "boundary_curve", "boundary_normal", "laplacian_convergence"),
        _minimality_suite,
    ),
    "reflections": Suite(("reflection_T", "reflection_lambda2_T"), _reflection_suite, True),
    "self_cpg": Suite(("self_cpg",), _self_cpg_suite, True),
    "diagonal_lines": Suite(("diagonal_lines",), _diagonal_suite, True),
    "adjoint_cpg": Suite(("adjoint_cpg",), _adjoint_cpg_suite, True),
    "straight_arc": Suite(("straight_arc",), _straight_arc_suite, True),
    "axis_rotation": Suite(("axis_rotation",), _axis_rotation_suite, True),
    "d4_d8": Suite(("lambda", "tau", "rho_literal", "rho_fitted"), _d4_d8_suite, True),
    "self_adjoint": Suite(("self_adjoint",), _self_adjoint_suite),
    "dihedral": Suite(("dihedral_search",), _dihedral_suite),
}
CHECK_NAMES: tuple[str, ...] = tuple(SUITES)

TRANSFORM_SUITES = ("strip", "minimality")
CPG_SUITES = ("self_cpg", "diagonal_lines")
ADJOINT_SUITES = ("straight_arc", "axis_rotation", "adjoint_cpg")
SYMMETRY_SUITES = ("reflections", "d4_d8", "self_adjoint", "dihedral")


def run_suites(ctx: SuiteContext, names: tuple[str, ...]) -> list[Record]:
    """Run suites in order.

    Suites that need a planar strip with ``phi = pi/2``, or a grid the check
    cannot sample, yield inapplicable records instead of raising.
    """
    records: list[Record] = []
    for name in names:
        suite = SUITES[name]
        if suite.planar_only and not ctx.planar_geodesic:
            records.extend(_inapplicable(suite.names, "needs a planar strip with phi = pi/2"))
            continue
        try:
            records.extend(suite.run(ctx))
        except (GridSymmetryError, CpgPlanarityError) as exc:
            logger.warning("Check %s skipped: %s", name, exc)
            records.extend(_inapplicable(suite.names, str(exc)))
    return records
