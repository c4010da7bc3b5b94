"""Command implementations for the minsurf CLI."""

from minsurf_cli.commands.catalog import catalog_command
from minsurf_cli.commands.relate import relate_command
from minsurf_cli.commands.search import search_command
from minsurf_cli.commands.surface import (
    adjoint_command,
    cpg_command,
    symmetry_command,
    transform_command,
    verify_command,
)

__all__ = [
    "adjoint_command",
    "catalog_command",
    "cpg_command",
    "relate_command",
    "search_command",
    "symmetry_command",
    "transform_command",
    "verify_command",
]
