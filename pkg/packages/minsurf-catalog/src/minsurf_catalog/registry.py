"""Registry of named strip factories."""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping
from dataclasses import dataclass

from minsurf_logging import get_logger

from minsurf_catalog.entry import CatalogEntry
from minsurf_catalog.exceptions import CatalogParameterError, UnknownCatalogEntryError

logger = get_logger("catalog.registry")

type EntryFactory = Callable[[Mapping[str, float]], CatalogEntry]


@dataclass(frozen=True)
class _Registration:
    factory: EntryFactory
    defaults: Mapping[str, float]
    description: str


class CatalogRegistry:
    """Named factories producing :class:`CatalogEntry` objects.

    Factories receive the registered defaults updated with caller overrides.
    """

    def __init__(self) -> None:
        """Initialize an empty registry."""
        self._entries: dict[str, _Registration] = {}

    def register(
        self,
        name: str,
        factory: EntryFactory,
        defaults: Mapping[str, float] | None = None,
        description: str = "",
    ) -> None:
        """Register (or replace) a factory under ``name``."""
        self._entries[name] = _Registration(factory, dict(defaults or {}), description)

    def build(self, name: str, parameters: Mapping[str, float] | None = None) -> CatalogEntry:
        """Instantiate an entry.

        Raises:
            UnknownCatalogEntryError: If ``name`` is not registered.
            CatalogParameterError: If a parameter is unknown or not finite.

        """
        if name not in self._entries:
            raise UnknownCatalogEntryError(name, self._entries)
        registration = self._entries[name]
        overrides = dict(parameters or {})
        unknown = sorted(set(overrides) - set(registration.defaults))
        if unknown:
            msg = f"{name} does not take parameter(s): {', '.join(unknown)}"
            raise CatalogParameterError(msg, name=name, parameters=unknown)
        merged = {**registration.defaults, **overrides}
        for key, value in merged.items():
            if not math.isfinite(value):
                msg = f"{name}: parameter {key} must be finite, got {value}"
                raise CatalogParameterError(msg, name=name, parameter=key)
        logger.debug("Building catalog entry %s with %s", name, merged)
        return registration.factory(merged)

    def defaults(self, name: str) -> Mapping[str, float]:
        if name not in self._entries:
            raise UnknownCatalogEntryError(name, self._entries)
        return dict(self._entries[name].defaults)

    def description(self, name: str) -> str:
        if name not in self._entries:
            raise UnknownCatalogEntryError(name, self._entries)
        return self._entries[name].description

    def list_entries(self) -> list[str]:
        return sorted(self._entries)


registry = CatalogRegistry()


def builtin(name: str, **parameters: float) -> CatalogEntry:
    """Build a registered entry from the global registry."""
    return registry.build(name, parameters)
