"""Catalog listing and export of built-in entries as spec files."""

from __future__ import annotations

from typing import Annotated

import typer
from minsurf_catalog import registry
from minsurf_export import write_atomic
from rich.console import Console
from rich.table import Table

from minsurf_cli.commands.common import (
    OutOption,
    ParamOption,
    parse_parameters,
    with_error_handling,
)
from minsurf_cli.spec_file import SpecFile

NameArgument = Annotated[
    str | None, typer.Argument(help="Entry to print as a spec file; omit to list entries.")
]


def _listing() -> Table:
    table = Table(title="Catalog entries")
    table.add_column("Name", style="cyan", no_wrap=True)
    table.add_column("Parameters")
    table.add_column("Description")
    for name in registry.list_entries():
        parameters = ", ".join(
            f"{key}={value:g}" for key, value in registry.defaults(name).items()
        )
        table.add_row(name, parameters or "-", registry.description(name))
    return table


@with_error_handling
def catalog_command(
    name: NameArgument = None,
    param: ParamOption = None,
    out: OutOption = None,
) -> None:
    """List the built-in strips, or write one as an editable spec file.

    Examples:
        minsurf catalog
        minsurf catalog weak_cpg --param k=2 --out weak_k2.toml

    """
    if name is None:
        Console().print(_listing())
        return
    entry = registry.build(name, parse_parameters(param))
    text = SpecFile.from_entry(entry).to_toml()
    if out is None:
        typer.echo(text, nl=False)
        return
    write_atomic(out, text.encode("utf-8"))
    typer.echo(f"✓ Wrote spec for {name} to: {out}")
