"""Exceptions raised by the command-line layer."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from pathlib import Path


class CliInputError(Exception):
    """Base exception for invalid command input.

    Parameters
    ----------
    message:
        Human-readable description of the failure.
    **context:
        Structured context for logs and error reports.

    """

    def __init__(self, message: str | None = None, **context: object) -> None:
        self.message = message or "Invalid input."
        self.context = dict(context)
        super().__init__(self.message)

    def __str__(self) -> str:
        """Return the human-readable message."""
        return self.message

    def __repr__(self) -> str:
        """Return a representation including structured context."""
        context_parts = ", ".join(f"{key}={value!r}" for key, value in self.context.items())
        if context_parts:
            return f"{self.__class__.__name__}(message={self.message!r}, {context_parts})"
        return f"{self.__class__.__name__}(message={self.message!r})"


class SpecFileError(CliInputError):
    """Raised when a spec file is missing, unreadable or malformed."""

    def __init__(self, message: str, path: Path | str | None = None, **context: object) -> None:
        self.path = path
        super().__init__(message, path=str(path) if path is not None else None, **context)


class InputSelectionError(CliInputError):
    """Raised when a command does not receive exactly the inputs it needs."""
