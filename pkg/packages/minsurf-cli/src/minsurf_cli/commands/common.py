"""Shared plumbing for minsurf commands: error handling, inputs, reports."""

from __future__ import annotations

import time
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import wraps
from pathlib import Path
from typing import TYPE_CHECKING, Annotated, TypeVar, cast

import click
import tomli_w
import typer
from minsurf_catalog import registry
from minsurf_errors import EXIT_CHECK_FAILED, format_error_for_cli, log_fields_for_error
from minsurf_export import build_report, write_report
from minsurf_logging import get_logger
from minsurf_settings import AppSettings, get_settings

from minsurf_cli.error_dispatcher import ErrorDispatcher
from minsurf_cli.exceptions import CliInputError, InputSelectionError
from minsurf_cli.spec_file import SpecFile
from minsurf_cli.suites import Tolerances
from minsurf_cli.validators import domain_validator, grid_validator, parameter_validator

if TYPE_CHECKING:
    from minsurf_export import ReportDocument

    from minsurf_cli.suites import Record

F = TypeVar("F", bound=Callable[..., object])

logger = get_logger("cli.commands")

_SETTINGS_KEY = "settings"

SpecArgument = Annotated[
    Path | None, typer.Argument(help="Spec file (TOML) describing the strip and domain.")
]
CatalogOption = Annotated[
    str | None, typer.Option("--catalog", "-c", help="Use a named catalog entry instead.")
]
ParamOption = Annotated[
    list[str] | None,
    typer.Option("--param", "-p", help="Catalog parameter as name=value (repeatable)."),
]
GridOption = Annotated[str | None, typer.Option("--grid", help="Grid resolution NUxNV.")]
DomainOption = Annotated[
    str | None, typer.Option("--domain", help="Domain rectangle uMIN:uMAX,vMIN:vMAX.")
]
TolOption = Annotated[
    float | None, typer.Option("--tol", min=0.0, help="Scale-normalized check tolerance.")
]
QuadTolOption = Annotated[
    float | None, typer.Option("--quad-tol", min=0.0, help="Line quadrature tolerance.")
]
OutOption = Annotated[Path | None, typer.Option("--out", "-o", help="Output file.")]
ReportOption = Annotated[Path | None, typer.Option("--report", "-r", help="JSON report path.")]
FormatOption = Annotated[str | None, typer.Option("--format", help="Mesh format: obj or ply.")]


def with_error_handling(func: F) -> F:  # noqa: UP047
    """Map exceptions to exit codes and print them on stderr."""

    @wraps(func)
    def wrapper(*args: object, **kwargs: object) -> object:
        verbose = current_settings().logging.verbosity > 0
        try:
            return func(*args, **kwargs)
        except (typer.Exit, click.ClickException):
            raise
        except Exception as exc:
            result = ErrorDispatcher().dispatch(exc, verbose=verbose)
            logger.debug("Command failed: %s", log_fields_for_error(result))
            typer.echo(format_error_for_cli(result), err=True)
            raise typer.Exit(result.exit_code) from exc

    return cast("F", wrapper)


def current_settings() -> AppSettings:
    """Settings stored by the app callback, or freshly loaded outside a CLI run."""
    current = click.get_current_context(silent=True)
    while current is not None:
        obj: object = current.obj
        if isinstance(obj, dict) and _SETTINGS_KEY in obj:
            return cast("AppSettings", obj[_SETTINGS_KEY])
        current = current.parent
    return get_settings()


def store_settings(ctx: typer.Context, settings: AppSettings) -> None:
    ctx.ensure_object(dict)
    ctx.obj[_SETTINGS_KEY] = settings


def _validated[T](result_value: T | None, error: str | None) -> T:
    if result_value is None:
        raise CliInputError(error or "Invalid input.")
    return result_value


def parse_grid(grid: str | None) -> tuple[int, int] | None:
    if grid is None:
        return None
    result = grid_validator.validate(grid)
    return _validated(result.value, result.error_message)


def parse_domain(domain: str | None) -> tuple[tuple[float, float], tuple[float, float]] | None:
    if domain is None:
        return None
    result = domain_validator.validate(domain)
    return _validated(result.value, result.error_message)


def parse_parameters(parameters: list[str] | None) -> dict[str, float]:
    parsed: dict[str, float] = {}
    for item in parameters or []:
        result = parameter_validator.validate(item)
        name, value = _validated(result.value, result.error_message)
        parsed[name] = value
    return parsed


@dataclass(frozen=True)
class ResolvedInput:
    """Effective spec of a run and the bytes its digest is computed from."""

    spec: SpecFile
    source: bytes
    label: str
    family_k: int | None = None


@dataclass(frozen=True)
class Overrides:
    grid: str | None = None
    domain: str | None = None
    tol: float | None = None

    def apply(self, spec: SpecFile) -> SpecFile:
        return spec.with_overrides(
            grid=parse_grid(self.grid), domain=parse_domain(self.domain), tol=self.tol
        )

    def as_toml(self) -> bytes:
        values = {
            key: value
            for key, value in (("grid", self.grid), ("domain", self.domain), ("tol", self.tol))
            if value is not None
        }
        if not values:
            return b""
        return tomli_w.dumps({"overrides": values}).encode("utf-8")


def load_catalog_input(
    name: str, parameters: list[str] | None, overrides: Overrides
) -> ResolvedInput:
    values = parse_parameters(parameters)
    entry = registry.build(name, values)
    spec = overrides.apply(SpecFile.from_entry(entry))
    k = entry.parameters.get("k")
    return ResolvedInput(
        spec=spec,
        source=spec.to_toml().encode("utf-8"),
        label=f"catalog:{name}",
        family_k=int(k) if k is not None else None,
    )


def load_file_input(path: Path, overrides: Overrides) -> ResolvedInput:
    spec, raw = SpecFile.from_file(path)
    return ResolvedInput(
        spec=overrides.apply(spec), source=raw + overrides.as_toml(), label=str(path)
    )


def resolve_input(
    spec_path: Path | None,
    catalog: str | None,
    parameters: list[str] | None,
    overrides: Overrides,
) -> ResolvedInput:
    """Load exactly one of a spec file or a catalog entry.

    Raises:
        InputSelectionError: If both or neither are given, or parameters come without a catalog.

    """
    if (spec_path is None) == (catalog is None):
        msg = "give either a spec file or --catalog NAME"
        raise InputSelectionError(msg)
    if catalog is not None:
        return load_catalog_input(catalog, parameters, overrides)
    if parameters:
        msg = "--param only applies to --catalog entries"
        raise InputSelectionError(msg)
    return load_file_input(cast("Path", spec_path), overrides)


def tolerances(
    spec: SpecFile, settings: AppSettings, quad_tol: float | None = None
) -> Tolerances:
    numerics = settings.numerics
    return Tolerances(
        check=spec.checks.tol if spec.checks.tol is not None else numerics.check_tol,
        registration=numerics.registration_tol,
        quad=quad_tol if quad_tol is not None else numerics.quad_tol,
        samples=numerics.samples,
    )


@dataclass
class Stopwatch:
    """Wall-clock seconds per named stage."""

    stages: dict[str, float] = field(default_factory=dict)

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            self.stages[name] = self.stages.get(name, 0.0) + time.perf_counter() - started


def _describe(record: Record) -> str:
    name = record["name"]
    residual = record.get("residual")
    shown = f"{residual:.3e}" if isinstance(residual, float) else "n/a"
    if not record.get("applicable", True):
        return f"- {name}: not applicable ({record.get('reason', 'skipped')})"
    mark = "✓" if record["pass"] else "✗"
    suffix = " (advisory)" if record.get("advisory") else ""
    return f"{mark} {name}: residual {shown}{suffix}"


def finish(  # noqa: PLR0913
    command: str,
    resolved: ResolvedInput,
    records: list[Record],
    *,
    settings: AppSettings,
    stopwatch: Stopwatch,
    report_path: Path | None = None,
    results: dict[str, object] | None = None,
) -> ReportDocument:
    """Print the verdicts, write the report and exit 1 if a counted check failed."""
    report = build_report(
        command,
        resolved.source,
        records,
        results=results,
        timings=stopwatch.stages,
        include_timings=settings.output.include_timings,
    )
    for record in records:
        typer.echo(_describe(record))
    target = report_path or (
        Path(resolved.spec.output.report) if resolved.spec.output.report else None
    )
    if target is not None:
        write_report(report, target)
        typer.echo(f"Report written to: {target}")
    if not report.passed:
        logger.info("Failed checks: %s", ", ".join(report.failed_checks))
        raise typer.Exit(EXIT_CHECK_FAILED)
    return report
