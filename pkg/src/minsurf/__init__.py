"""minsurf - Björling minimal surfaces and their symmetry checks."""

from minsurf_cli import main as cli_main


def main() -> None:
    """Entry point for the minsurf application."""
    cli_main()
