"""Exceptions raised while writing meshes and reports."""

from __future__ import annotations


class ExportError(Exception):
    """Base exception for export failures.

    Parameters
    ----------
    message:
        Human-readable description of the failure.
    **context:
        Structured context for logs and error reports.

    """

    def __init__(self, message: str | None = None, **context: object) -> None:
        self.message = message or "Export error."
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


class ExportIOError(ExportError):
    """Raised when a file cannot be written.

    The original ``OSError`` is kept as ``__cause__``.
    """

    def __init__(self, message: str, cause: Exception | None = None, **context: object) -> None:
        super().__init__(message, **context)
        if cause:
            self.__cause__ = cause


class ExportDataError(ExportError):
    """Raised when data cannot be serialized or violates the document contract."""

    def __init__(self, message: str, cause: Exception | None = None, **context: object) -> None:
        super().__init__(message, **context)
        if cause:
            self.__cause__ = cause
