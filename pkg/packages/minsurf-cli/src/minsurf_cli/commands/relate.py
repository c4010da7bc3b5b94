"""Sampled congruence between two Björling patches."""

from __future__ import annotations

from pathlib import Path
from typing import Annotated

import typer
from minsurf_bjorling import evaluate_patch
from minsurf_logging import get_logger
from minsurf_symmetry import congruence_test

from minsurf_cli.commands.common import (
    DomainOption,
    GridOption,
    Overrides,
    QuadTolOption,
    ReportOption,
    ResolvedInput,
    Stopwatch,
    TolOption,
    current_settings,
    finish,
    load_catalog_input,
    load_file_input,
    tolerances,
    with_error_handling,
)
from minsurf_cli.exceptions import InputSelectionError

logger = get_logger("cli.relate")

INPUT_COUNT = 2

SpecsArgument = Annotated[
    list[Path] | None, typer.Argument(help="Up to two spec files to compare.")
]
CatalogsOption = Annotated[
    list[str] | None,
    typer.Option("--catalog", "-c", help="Catalog entry to compare (repeatable)."),
]
ScaleOption = Annotated[
    bool, typer.Option("--scale/--rigid", help="Allow a uniform scale in the registration.")
]


def _inputs(
    specs: list[Path] | None, catalogs: list[str] | None, overrides: Overrides
) -> list[ResolvedInput]:
    inputs = [load_file_input(path, overrides) for path in specs or []]
    inputs.extend(load_catalog_input(name, None, overrides) for name in catalogs or [])
    if len(inputs) != INPUT_COUNT:
        msg = f"relate needs exactly two inputs, got {len(inputs)}"
        raise InputSelectionError(msg)
    return inputs


@with_error_handling
def relate_command(  # noqa: PLR0913
    specs: SpecsArgument = None,
    catalog: CatalogsOption = None,
    grid: GridOption = None,
    domain: DomainOption = None,
    tol: TolOption = None,
    quad_tol: QuadTolOption = None,
    report: ReportOption = None,
    scale: ScaleOption = False,
) -> None:
    """Register the second surface onto the first over parameter-matched samples.

    Both inputs are evaluated on their own grids. When the grids differ the
    second surface is resampled at the nodes of the first inside its domain.
    A pass is a sampled check, not a proof of congruence.

    Examples:
        minsurf relate scaled.toml --catalog circle --scale

    """
    settings = current_settings()
    stopwatch = Stopwatch()
    first, second = _inputs(specs, catalog, Overrides(grid, domain, tol))
    tol_first = tolerances(first.spec, settings, quad_tol)
    with stopwatch.stage("evaluate"):
        reference, candidate = (
            evaluate_patch(
                resolved.spec.build_strip(),
                resolved.spec.domain.to_grid(),
                quad_tol=tol_first.quad,
                max_levels=settings.numerics.max_refinement_levels,
            )
            for resolved in (first, second)
        )
    with stopwatch.stage("registration"):
        result = congruence_test(reference, candidate, allow_scale=scale, tol=tol_first.check)
    logger.info("Related %s and %s", first.label, second.label)
    typer.echo(f"Scale {result.scale:.6g}")
    combined = ResolvedInput(
        spec=first.spec,
        source=first.source + b"\n" + second.source,
        label=f"{first.label} ~ {second.label}",
    )
    finish(
        "relate",
        combined,
        [result.as_record()],
        settings=settings,
        stopwatch=stopwatch,
        report_path=report,
        results={"inputs": [first.label, second.label]},
    )
