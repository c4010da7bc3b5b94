"""Grid evaluation of the Björling transformation."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from minsurf_analytic import BranchTracker
from minsurf_logging import get_logger

from minsurf_bjorling.isotropic import IsotropicCurve
from minsurf_bjorling.quadrature import DEFAULT_MAX_LEVELS, LineIntegral, integrate_line

if TYPE_CHECKING:
    from collections.abc import Sequence

    from numpy.typing import NDArray

    from minsurf_bjorling.grid import DomainGrid
    from minsurf_bjorling.strip import Strip

logger = get_logger("bjorling.patch")

SINGULAR_EPSILON = 1e-16


@dataclass(frozen=True, eq=False)
class SurfacePatch:
    """``f`` and ``f'`` on a grid, plus the surfaces and Gauss map derived from them.

    Arrays have shape ``(nu, nv, 3)``. ``x`` is ``Re f``, ``x_star`` is ``Im f``
    and ``normal`` is ``X_u x X_v`` normalized, with ``X_u = Re f'`` and
    ``X_v = -Im f'``. Normals are NaN where the patch is singular.
    """

    grid: DomainGrid
    f: NDArray[np.complex128]
    fprime: NDArray[np.complex128]
    source: IsotropicCurve
    normal: NDArray[np.float64] = field(init=False, repr=False)
    singular_mask: NDArray[np.bool_] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        """Derive the Gauss map and the singular mask from ``f'``."""
        x_u, x_v = self.fprime.real, -self.fprime.imag
        cross = np.cross(x_u, x_v)
        length = np.linalg.norm(cross, axis=-1, keepdims=True)
        singular = np.sum(np.abs(self.fprime) ** 2, axis=-1) < SINGULAR_EPSILON
        with np.errstate(invalid="ignore", divide="ignore"):
            normal = np.where(singular[..., None], np.nan, cross / length)
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "singular_mask", singular)

    @property
    def x(self) -> NDArray[np.float64]:
        return self.f.real

    @property
    def x_star(self) -> NDArray[np.float64]:
        return self.f.imag

    @property
    def x_u(self) -> NDArray[np.float64]:
        return self.fprime.real

    @property
    def x_v(self) -> NDArray[np.float64]:
        return -self.fprime.imag

    @property
    def scale(self) -> float:
        """``max |f'|`` times the domain diameter; residuals are divided by it."""
        return float(np.sqrt(np.sum(np.abs(self.fprime) ** 2, axis=-1)).max()) * self.grid.diameter

    def adjoint(self) -> SurfacePatch:
        return adjoint_patch(self)


def _breakpoints(distances: NDArray[np.float64]) -> tuple[NDArray[np.float64], NDArray[np.intp]]:
    """Return sorted unique breakpoints from 0 and where each distance landed."""
    breaks = np.unique(np.concatenate([[0.0], distances]))
    return breaks, np.searchsorted(breaks, distances)


@dataclass(frozen=True)
class _Pass:
    """One straight pass: which grid nodes it covers and the integral along it."""

    nodes: NDArray[np.intp]
    where: NDArray[np.intp]
    line: LineIntegral


def _passes(
    curve: IsotropicCurve,
    coordinates: NDArray[np.float64],
    start: float,
    origin: NDArray[np.complex128],
    unit: complex,
    tracker: BranchTracker,
) -> list[_Pass]:
    """Integrate from ``origin`` forwards and backwards along ``unit`` to each coordinate."""
    passes: list[_Pass] = []
    for sign, selected in ((1.0, coordinates >= start), (-1.0, coordinates < start)):
        nodes = np.flatnonzero(selected)
        if nodes.size == 0:
            continue
        breaks, where = _breakpoints(sign * (coordinates[nodes] - start))
        line = integrate_line(
            curve.field,
            origin,
            sign * unit,
            breaks,
            curve.quad_tol,
            tracker.fork(),
            max_levels=curve.max_levels,
        )
        passes.append(_Pass(nodes=nodes, where=where, line=line))
    return passes


def _restart(passes: Sequence[_Pass]) -> BranchTracker:
    ordered = sorted(passes, key=lambda item: int(item.nodes[0]))
    return BranchTracker.concatenate([item.line.tracker.restart_at(item.where) for item in ordered])


def evaluate_patch(
    strip: Strip,
    grid: DomainGrid,
    quad_tol: float = 1e-10,
    max_levels: int = DEFAULT_MAX_LEVELS,
) -> SurfacePatch:
    """Evaluate the isotropic curve of ``strip`` on every grid node.

    The integral runs from the base point along the real direction to each
    column, then vertically up and down every column, batched over columns.
    ``f' = c' - i n x c'`` is evaluated directly at each node.

    Raises:
        QuadratureError: If a segment does not converge.
        BranchPointError: If a sqrt radicand vanishes along a path.

    """
    started = time.perf_counter()
    curve = IsotropicCurve(
        strip=strip, base_point=grid.base_point, quad_tol=quad_tol, max_levels=max_levels
    )
    base = grid.base_point
    logger.info("Evaluating patch on a %dx%d grid", grid.nu, grid.nv)

    row = _passes(curve, grid.u, base.real, np.asarray(base), 1.0 + 0j, BranchTracker())
    column_integral = np.zeros((3, grid.nu), dtype=np.complex128)
    for item in row:
        column_integral[:, item.nodes] = item.line.integrals[..., item.where]
    column_tracker = _restart(row)

    origins = grid.u + 1j * base.imag
    f = np.zeros((grid.nu, grid.nv, 3), dtype=np.complex128)
    fprime = np.zeros_like(f)
    levels = max(item.line.levels for item in row)
    for item in _passes(curve, grid.v, base.imag, origins, 1j, column_tracker):
        line = item.line
        integral = column_integral[..., None] + line.integrals[..., item.where]
        samples = line.samples[..., item.where]
        f[:, item.nodes, :] = np.moveaxis(samples[3:6] - 1j * integral, 0, -1)
        fprime[:, item.nodes, :] = np.moveaxis(samples[6:9] - 1j * samples[0:3], 0, -1)
        levels = max(levels, line.levels)

    patch = SurfacePatch(grid=grid, f=f, fprime=fprime, source=curve)
    singular = int(patch.singular_mask.sum())
    if singular:
        logger.warning("Patch has %d singular nodes", singular)
    logger.info(
        "Patch evaluated: %d refinement levels, %.3fs", levels, time.perf_counter() - started
    )
    return patch


def adjoint_patch(patch: SurfacePatch) -> SurfacePatch:
    """Return the patch of ``-i f``: its ``x`` is the adjoint surface ``X*``."""
    return SurfacePatch(
        grid=patch.grid,
        f=-1j * patch.f,
        fprime=-1j * patch.fprime,
        source=patch.source.adjoint(),
    )


def path_independence_residual(patch: SurfacePatch, stride: int | None = None) -> float:
    """Largest ``|f|`` difference between grid values and straight rays from the base point.

    Compares every ``stride``-th node in both directions (about five per axis by default).
    """
    step_u = stride or max(1, (patch.grid.nu - 1) // 4)
    step_v = stride or max(1, (patch.grid.nv - 1) // 4)
    points = patch.grid.points()[::step_u, ::step_v]
    direct = patch.source.values(points).f
    return float(np.abs(direct - patch.f[::step_u, ::step_v]).max())
