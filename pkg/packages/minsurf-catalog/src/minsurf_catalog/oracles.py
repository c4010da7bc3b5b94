"""Closed-form minimal surfaces used as oracles for the Björling transform."""

from __future__ import annotations

from collections.abc import Callable
from typing import TYPE_CHECKING

import numpy as np

from minsurf_catalog.exceptions import UnknownCatalogEntryError

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

type Oracle = Callable[[ArrayLike, ArrayLike], NDArray[np.float64]]


def catenoid(u: ArrayLike, v: ArrayLike) -> NDArray[np.float64]:
    u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    return np.stack([np.cos(u) * np.cosh(v), np.sin(u) * np.cosh(v), v], axis=-1)


def helicoid(u: ArrayLike, v: ArrayLike) -> NDArray[np.float64]:
    u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    return np.stack([u, np.sin(u) * np.sinh(v), -np.cos(u) * np.sinh(v)], axis=-1)


def enneper(u: ArrayLike, v: ArrayLike) -> NDArray[np.float64]:
    w = np.asarray(u, dtype=float) + 1j * np.asarray(v, dtype=float)
    return np.stack([w**2, w**3 / 3 - w, -1j * (w**3 / 3 + w)], axis=-1).real


def plane(u: ArrayLike, v: ArrayLike) -> NDArray[np.float64]:
    u, v = np.broadcast_arrays(np.asarray(u, dtype=float), np.asarray(v, dtype=float))
    return np.stack([u, v, np.zeros_like(u)], axis=-1)


ORACLES: dict[str, Oracle] = {
    "catenoid": catenoid,
    "helicoid": helicoid,
    "enneper": enneper,
    "plane": plane,
}


def closed_form(name: str) -> Oracle:
    """Return the exact ``X(u, v)`` of a named surface.

    Raises:
        UnknownCatalogEntryError: If no oracle has that name.

    """
    try:
        return ORACLES[name]
    except KeyError:
        raise UnknownCatalogEntryError(name, ORACLES) from None
