"""minsurf CLI package entry point."""

from __future__ import annotations

from pathlib import Path

import typer
from minsurf_errors import format_error_for_cli
from minsurf_logging import configure_logging
from minsurf_settings import ConfigFileError, get_settings
from pydantic import ValidationError

from minsurf_cli.commands import (
    adjoint_command,
    catalog_command,
    cpg_command,
    relate_command,
    search_command,
    symmetry_command,
    transform_command,
    verify_command,
)
from minsurf_cli.commands.common import store_settings
from minsurf_cli.error_dispatcher import ErrorDispatcher

app = typer.Typer(no_args_is_help=True, add_completion=False)

app.command(name="transform")(transform_command)
app.command(name="verify")(verify_command)
app.command(name="cpg")(cpg_command)
app.command(name="adjoint")(adjoint_command)
app.command(name="symmetry")(symmetry_command)
app.command(name="relate")(relate_command)
app.command(name="search")(search_command)
app.command(name="catalog")(catalog_command)


@app.callback()
def main_callback(
    ctx: typer.Context,
    verbose: int = typer.Option(
        0,
        "--verbose",
        "-v",
        count=True,
        help="Increase verbosity level. Use -v for INFO, -vv for DEBUG.",
    ),
    timings: bool | None = typer.Option(
        None,
        "--timings/--no-timings",
        help="Include per-stage wall-clock timings in reports.",
    ),
    config: Path | None = typer.Option(
        None,
        "--config",
        envvar="MINSURF_CONFIG",
        help="Config file for this run, between the project config and MINSURF_* variables.",
    ),
) -> None:
    """Evaluate Björling minimal surfaces and check their symmetries.

    Settings are loaded from multiple sources in order of precedence:
    1. Model defaults (lowest)
    2. Global config (~/.minsurf/config.toml)
    3. Project config (.minsurf/config.toml)
    4. Run config (--config FILE)
    5. Environment variables (MINSURF_*)
    6. CLI flags (highest)
    """
    cli_overrides: dict[str, object] = {}
    if verbose > 0:
        # DEBUG is the highest level
        cli_overrides["logging"] = {"verbosity": min(verbose, 2)}
    if timings is not None:
        cli_overrides["output"] = {"include_timings": timings}

    try:
        settings = get_settings(cli_overrides=cli_overrides, config_file=config)
    except (ConfigFileError, ValidationError) as exc:
        result = ErrorDispatcher().dispatch(exc, verbose=verbose > 0)
        typer.echo(format_error_for_cli(result), err=True)
        raise typer.Exit(result.exit_code) from exc
    configure_logging(settings.logging)
    store_settings(ctx, settings)


def main() -> None:
    """Run the minsurf CLI application."""
    app()


if __name__ == "__main__":
    main()
