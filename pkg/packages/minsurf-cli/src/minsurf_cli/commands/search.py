"""Self-CPG residual search over a polynomial curve family."""

from __future__ import annotations

from typing import Annotated

import typer
from minsurf_logging import get_logger
from minsurf_symmetry import self_cpg_search

from minsurf_cli.commands.common import (
    CatalogOption,
    DomainOption,
    GridOption,
    Overrides,
    ParamOption,
    QuadTolOption,
    ReportOption,
    SpecArgument,
    Stopwatch,
    TolOption,
    current_settings,
    finish,
    resolve_input,
    tolerances,
    with_error_handling,
)

logger = get_logger("cli.search")

BudgetOption = Annotated[
    int | None, typer.Option("--budget", min=1, help="Objective evaluations over all restarts.")
]
SeedOption = Annotated[int | None, typer.Option("--seed", help="Seed for restart points.")]
RestartsOption = Annotated[int | None, typer.Option("--restarts", min=1, help="Restart count.")]
WorkersOption = Annotated[
    int | None, typer.Option("--workers", min=1, help="Threads running restarts.")
]


@with_error_handling
def search_command(  # noqa: PLR0913
    spec: SpecArgument = None,
    catalog: CatalogOption = None,
    param: ParamOption = None,
    grid: GridOption = None,
    domain: DomainOption = None,
    tol: TolOption = None,
    quad_tol: QuadTolOption = None,
    report: ReportOption = None,
    budget: BudgetOption = None,
    seed: SeedOption = None,
    restarts: RestartsOption = None,
    workers: WorkersOption = None,
) -> None:
    """Minimize the self-CPG residual over the [search] coefficients.

    Without a [search] section (and for catalog entries) the curve itself is
    scored once. The same seed always gives the same result.

    Examples:
        minsurf search family.toml --budget 400 --seed 7

    """
    settings = current_settings()
    stopwatch = Stopwatch()
    resolved = resolve_input(spec, catalog, param, Overrides(grid, domain, tol))
    section = resolved.spec.search
    family = resolved.spec.search_family()
    tol_values = tolerances(resolved.spec, settings, quad_tol)
    defaults = settings.search
    effective_budget = budget or (section.budget if section else None) or defaults.budget
    if seed is not None:
        effective_seed = seed
    elif section is not None and section.seed is not None:
        effective_seed = section.seed
    else:
        effective_seed = defaults.seed
    logger.info(
        "Searching %d coefficient(s) with budget %d and seed %d",
        family.dimension,
        effective_budget,
        effective_seed,
    )
    with stopwatch.stage("search"):
        result = self_cpg_search(
            family,
            effective_budget,
            resolved.spec.domain.to_grid(),
            tol_values.check,
            restarts=restarts or defaults.restarts,
            seed=effective_seed,
            workers=workers or defaults.workers,
            quad_tol=tol_values.quad,
        )
    if result.best_theta:
        coefficients = ", ".join(f"{value:.9g}" for value in result.best_theta)
        typer.echo(f"Best coefficients: ({coefficients})")
    record: dict[str, object] = {
        "name": "self_cpg_search",
        "residual": result.residual,
        "tolerance": tol_values.check,
        "pass": result.residual <= tol_values.check,
        "restart": result.restart,
        "evaluations": result.evaluations,
    }
    finish(
        "search",
        resolved,
        [record],
        settings=settings,
        stopwatch=stopwatch,
        report_path=report,
        results={"search": result.as_record()},
    )
