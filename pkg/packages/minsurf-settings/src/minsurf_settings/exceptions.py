"""Errors raised while loading configuration files."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pathlib import Path


class ConfigFileError(Exception):
    """Raised when a config file named explicitly cannot be read or parsed."""

    def __init__(self, path: Path, reason: str) -> None:
        self.path = path
        self.reason = reason
        self.context = {"path": str(path)}
        super().__init__(f"Cannot load config file {path}: {reason}")
