"""Commands working on one Björling patch: transform, verify, cpg, adjoint, symmetry."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Annotated

import typer
from minsurf_bjorling import evaluate_patch
from minsurf_export import export_mesh
from minsurf_logging import get_logger
from minsurf_symmetry import CpgPlanarityError, GridSymmetryError, extract_cpg

from minsurf_cli.commands.common import (
    CatalogOption,
    DomainOption,
    FormatOption,
    GridOption,
    OutOption,
    Overrides,
    ParamOption,
    QuadTolOption,
    ReportOption,
    ResolvedInput,
    SpecArgument,
    Stopwatch,
    TolOption,
    current_settings,
    finish,
    resolve_input,
    tolerances,
    with_error_handling,
)
from minsurf_cli.suites import (
    ADJOINT_SUITES,
    CPG_SUITES,
    SYMMETRY_SUITES,
    TRANSFORM_SUITES,
    SuiteContext,
    run_suites,
)

if TYPE_CHECKING:
    from minsurf_bjorling import SurfacePatch
    from minsurf_settings import AppSettings

logger = get_logger("cli.surface")


def _context(
    resolved: ResolvedInput,
    settings: AppSettings,
    quad_tol: float | None,
    stopwatch: Stopwatch,
) -> SuiteContext:
    spec = resolved.spec
    tol = tolerances(spec, settings, quad_tol)
    with stopwatch.stage("strip"):
        strip = spec.build_strip()
    with stopwatch.stage("evaluate"):
        patch = evaluate_patch(
            strip,
            spec.domain.to_grid(),
            quad_tol=tol.quad,
            max_levels=settings.numerics.max_refinement_levels,
        )
    logger.info("Evaluated %s on %dx%d nodes", resolved.label, patch.grid.nu, patch.grid.nv)
    return SuiteContext(strip=strip, patch=patch, tolerances=tol, family_k=resolved.family_k)


def _write_mesh(
    patch: SurfacePatch,
    resolved: ResolvedInput,
    settings: AppSettings,
    out: Path | None,
    mesh_format: str | None,
) -> dict[str, object] | None:
    output = resolved.spec.output
    target = out or (Path(output.mesh) if output.mesh else None)
    if target is None:
        return None
    fmt = mesh_format or output.format or settings.output.mesh_format
    summary = export_mesh(patch, target, fmt, normals=settings.output.normals)
    typer.echo(
        f"✓ Wrote {summary.format.value.upper()} mesh to: {target} "
        f"({summary.vertices} vertices, {summary.faces} faces)"
    )
    return {
        "path": str(target),
        "format": summary.format.value,
        "vertices": summary.vertices,
        "faces": summary.faces,
        "singular_vertices": summary.singular_vertices,
    }


def _extract(ctx: SuiteContext, stopwatch: Stopwatch) -> dict[str, object] | None:
    if not ctx.planar_geodesic:
        return None
    try:
        with stopwatch.stage("cpg"):
            extraction = extract_cpg(ctx.patch, ctx.tolerances.samples, ctx.tolerances.check)
    except (GridSymmetryError, CpgPlanarityError) as exc:
        logger.warning("CPG curve not extracted: %s", exc)
        return None
    middle = extraction.points[extraction.parameters.size // 2]
    vertex = ", ".join(f"{value:.6g}" for value in middle)
    typer.echo(f"CPG vertex: ({vertex}), planarity residual {extraction.planarity_residual:.3e}")
    return extraction.as_record()


@with_error_handling
def transform_command(  # noqa: PLR0913
    spec: SpecArgument = None,
    catalog: CatalogOption = None,
    param: ParamOption = None,
    grid: GridOption = None,
    domain: DomainOption = None,
    tol: TolOption = None,
    quad_tol: QuadTolOption = None,
    out: OutOption = None,
    report: ReportOption = None,
    mesh_format: FormatOption = None,
) -> None:
    """Evaluate the Björling surface of a strip, export a mesh and check minimality.

    Examples:
        minsurf transform --catalog enneper_cubic --grid 101x101 --out enneper.obj

    """
    settings = current_settings()
    stopwatch = Stopwatch()
    resolved = resolve_input(spec, catalog, param, Overrides(grid, domain, tol))
    ctx = _context(resolved, settings, quad_tol, stopwatch)
    with stopwatch.stage("checks"):
        records = run_suites(ctx, TRANSFORM_SUITES)
    with stopwatch.stage("export"):
        mesh = _write_mesh(ctx.patch, resolved, settings, out, mesh_format)
    finish(
        "transform",
        resolved,
        records,
        settings=settings,
        stopwatch=stopwatch,
        report_path=report,
        results={"mesh": mesh} if mesh else None,
    )


@with_error_handling
def verify_command(  # noqa: PLR0913
    spec: SpecArgument = None,
    catalog: CatalogOption = None,
    param: ParamOption = None,
    grid: GridOption = None,
    domain: DomainOption = None,
    tol: TolOption = None,
    quad_tol: QuadTolOption = None,
    report: ReportOption = None,
) -> None:
    """Run the checks listed under [checks] (strip and minimality by default)."""
    settings = current_settings()
    stopwatch = Stopwatch()
    resolved = resolve_input(spec, catalog, param, Overrides(grid, domain, tol))
    ctx = _context(resolved, settings, quad_tol, stopwatch)
    names = resolved.spec.checks.names or TRANSFORM_SUITES
    with stopwatch.stage("checks"):
        records = run_suites(ctx, names)
    finish("verify", resolved, records, settings=settings, stopwatch=stopwatch, report_path=report)


@with_error_handling
def cpg_command(  # noqa: PLR0913
    spec: SpecArgument = None,
    catalog: CatalogOption = None,
    param: ParamOption = None,
    grid: GridOption = None,
    domain: DomainOption = None,
    tol: TolOption = None,
    quad_tol: QuadTolOption = None,
    report: ReportOption = None,
) -> None:
    """Extract the CPG curve X(it) and test the self-CPG relation and the diagonal lines."""
    settings = current_settings()
    stopwatch = Stopwatch()
    resolved = resolve_input(spec, catalog, param, Overrides(grid, domain, tol))
    ctx = _context(resolved, settings, quad_tol, stopwatch)
    cpg = _extract(ctx, stopwatch)
    with stopwatch.stage("checks"):
        records = run_suites(ctx, CPG_SUITES)
    finish(
        "cpg",
        resolved,
        records,
        settings=settings,
        stopwatch=stopwatch,
        report_path=report,
        results={"cpg": cpg} if cpg else None,
    )


@with_error_handling
def adjoint_command(  # noqa: PLR0913
    spec: SpecArgument = None,
    catalog: CatalogOption = None,
    param: ParamOption = None,
    grid: GridOption = None,
    domain: DomainOption = None,
    tol: TolOption = None,
    quad_tol: QuadTolOption = None,
    out: OutOption = None,
    report: ReportOption = None,
    mesh_format: FormatOption = None,
) -> None:
    """Evaluate the adjoint surface, export it and check its straight line and diagonals."""
    settings = current_settings()
    stopwatch = Stopwatch()
    resolved = resolve_input(spec, catalog, param, Overrides(grid, domain, tol))
    ctx = _context(resolved, settings, quad_tol, stopwatch)
    with stopwatch.stage("checks"):
        records = run_suites(ctx, ADJOINT_SUITES)
    with stopwatch.stage("export"):
        mesh = _write_mesh(ctx.adjoint, resolved, settings, out, mesh_format)
    finish(
        "adjoint",
        resolved,
        records,
        settings=settings,
        stopwatch=stopwatch,
        report_path=report,
        results={"mesh": mesh} if mesh else None,
    )


MaxOrderOption = Annotated[
    int, typer.Option("--max-order", min=2, help="Largest domain rotation order to try.")
]


@with_error_handling
def symmetry_command(  # noqa: PLR0913
    spec: SpecArgument = None,
    catalog: CatalogOption = None,
    param: ParamOption = None,
    grid: GridOption = None,
    domain: DomainOption = None,
    tol: TolOption = None,
    quad_tol: QuadTolOption = None,
    report: ReportOption = None,
    max_order: MaxOrderOption = 12,
) -> None:
    """Run the reflection, D4/D8, self-adjoint and dihedral-order suite."""
    settings = current_settings()
    stopwatch = Stopwatch()
    resolved = resolve_input(spec, catalog, param, Overrides(grid, domain, tol))
    ctx = _context(resolved, settings, quad_tol, stopwatch)
    ctx.max_order = max_order
    with stopwatch.stage("checks"):
        records = run_suites(ctx, SYMMETRY_SUITES)
    finish(
        "symmetry", resolved, records, settings=settings, stopwatch=stopwatch, report_path=report
    )
