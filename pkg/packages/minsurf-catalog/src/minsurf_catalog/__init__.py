"""Named Björling strips, their default grids and closed-form oracles."""

from minsurf_catalog import entries as _entries  # noqa: F401
from minsurf_catalog.entry import CatalogEntry, ExpectedProperties, StripSources
from minsurf_catalog.exceptions import (
    CatalogError,
    CatalogParameterError,
    UnknownCatalogEntryError,
)
from minsurf_catalog.oracles import ORACLES, Oracle, closed_form
from minsurf_catalog.registry import CatalogRegistry, EntryFactory, builtin, registry

__all__ = [
    "ORACLES",
    "CatalogEntry",
    "CatalogError",
    "CatalogParameterError",
    "CatalogRegistry",
    "EntryFactory",
    "ExpectedProperties",
    "Oracle",
    "StripSources",
    "UnknownCatalogEntryError",
    "builtin",
    "closed_form",
    "registry",
]
