"""Sampling helpers: mapped grid nodes, axis extents and off-grid surface values."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from minsurf_symmetry.exceptions import GridSymmetryError

if TYPE_CHECKING:
    from collections.abc import Callable

    from minsurf_bjorling import DomainGrid, SurfacePatch
    from numpy.typing import ArrayLike, NDArray


@dataclass(frozen=True)
class MappedNodes:
    """Grid nodes ``points`` (flat ``indices``) whose ``images`` stay inside the grid."""

    indices: NDArray[np.intp]
    points: NDArray[np.complex128]
    images: NDArray[np.complex128]

    @property
    def count(self) -> int:
        return int(self.indices.size)


def mapped_nodes(
    grid: DomainGrid, mapping: Callable[[NDArray[np.complex128]], NDArray[np.complex128]]
) -> MappedNodes:
    points = grid.points().ravel()
    images = mapping(points)
    keep = np.flatnonzero(grid.contains(images))
    return MappedNodes(indices=keep, points=points[keep], images=images[keep])


def node_values(patch: SurfacePatch, nodes: MappedNodes) -> NDArray[np.complex128]:
    """``f`` at the selected grid nodes, shape ``(count, 3)``."""
    return patch.f.reshape(-1, 3)[nodes.indices]


def surface_f(patch: SurfacePatch, points: ArrayLike) -> NDArray[np.complex128]:
    """``f`` at arbitrary domain points, integrated along rays from the base point."""
    return patch.source.values(points).f


def vertex_value(patch: SurfacePatch) -> NDArray[np.complex128]:
    return surface_f(patch, np.zeros(1))[0]


def _half_width(low: float, high: float) -> float:
    if low > 0.0 or high < 0.0:
        return 0.0
    return min(-low, high)


def axis_extent(grid: DomainGrid, *, real: bool = True, imaginary: bool = True) -> float:
    """Largest ``T`` such that the requested axis segments ``[-T, T]`` lie in the grid.

    Raises:
        GridSymmetryError: If 0 is outside the grid or a requested axis has no
            symmetric segment through it.

    """
    (u_min, u_max), (v_min, v_max) = grid.u_range, grid.v_range
    widths: list[float] = []
    if real:
        widths.append(_half_width(u_min, u_max))
    if imaginary:
        widths.append(_half_width(v_min, v_max))
    origin_inside = u_min <= 0.0 <= u_max and v_min <= 0.0 <= v_max
    extent = min(widths)
    if not origin_inside or extent <= 0.0:
        msg = "grid does not contain a symmetric segment of the axes through 0"
        raise GridSymmetryError(msg, u_range=grid.u_range, v_range=grid.v_range)
    return extent


def axis_samples(extent: float, samples: int) -> NDArray[np.float64]:
    """Symmetric samples of ``[-extent, extent]``; an odd count so that 0 is included."""
    count = samples if samples % 2 else samples + 1
    return np.linspace(-extent, extent, count)


def max_distance(a: ArrayLike, b: ArrayLike) -> float:
    difference = np.asarray(a) - np.asarray(b)
    if difference.size == 0:
        return 0.0
    return float(np.linalg.norm(difference, axis=-1).max())


def require_symmetric(grid: DomainGrid, *, u: bool = True, v: bool = True) -> None:
    """Raise ``GridSymmetryError`` unless the requested ranges are centred on 0."""
    if (u and grid.u_range[0] != -grid.u_range[1]) or (v and grid.v_range[0] != -grid.v_range[1]):
        msg = "grid must be symmetric about the axes used by this check"
        raise GridSymmetryError(msg, u_range=grid.u_range, v_range=grid.v_range)


def principal_axes(points: NDArray[np.float64]) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Singular values and right singular vectors of the centred point cloud."""
    centered = points - points.mean(axis=0)
    _, singular, vt = np.linalg.svd(centered, full_matrices=False)
    return singular, vt


def line_distance(points: NDArray[np.float64], direction: NDArray[np.float64]) -> float:
    """Largest distance from ``points`` to the line through 0 along ``direction``."""
    unit = direction / np.linalg.norm(direction)
    along = (points @ unit)[:, None] * unit
    return max_distance(points, along)
