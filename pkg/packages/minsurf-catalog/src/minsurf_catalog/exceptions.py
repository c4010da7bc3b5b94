"""Exception hierarchy for the strip catalog."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable


class CatalogError(Exception):
    """Base exception for catalog lookups.

    Parameters
    ----------
    message:
        Human-readable description of the failure.
    **context:
        Structured context for logs and error reports.

    """

    def __init__(self, message: str | None = None, **context: object) -> None:
        self.message = message or "Catalog error."
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


class UnknownCatalogEntryError(CatalogError):
    """Raised when a name is not registered."""

    def __init__(self, name: str, available: Iterable[str]) -> None:
        self.name = name
        self.available = sorted(available)
        listing = ", ".join(self.available) or "none"
        super().__init__(
            f"unknown catalog entry '{name}'. Available entries: {listing}",
            name=name,
        )


class CatalogParameterError(CatalogError):
    """Raised when entry parameters are unknown or out of range."""
