"""Adaptive composite Gauss-Legendre integration along straight complex segments."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Protocol

import numpy as np
from minsurf_analytic import BranchTracker
from minsurf_logging import get_logger

from minsurf_bjorling.exceptions import QuadratureError

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

logger = get_logger("bjorling.quadrature")

GAUSS_ORDER = 16
DEFAULT_MAX_LEVELS = 16


class LineField(Protocol):
    """Holomorphic field sampled along paths.

    Called with points of shape ``batch + (P,)`` laid out along each path and
    returns rows of shape ``(rows,) + batch + (P,)``.
    """

    def __call__(
        self, points: NDArray[np.complex128], tracker: BranchTracker
    ) -> NDArray[np.complex128]: ...


_GAUSS_NODES, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(GAUSS_ORDER)
_COARSE = (_GAUSS_NODES + 1.0) / 2.0
_FINE = np.concatenate([_COARSE / 2.0, 0.5 + _COARSE / 2.0])

# Per-interval sampling pattern on [0, 1]: start point, coarse nodes, fine nodes, sorted.
_UNSORTED = np.concatenate([[0.0], _COARSE, _FINE])
_ORDER = np.argsort(_UNSORTED, kind="stable")
_PATTERN = _UNSORTED[_ORDER]
_RANK = np.argsort(_ORDER, kind="stable")
_COARSE_AT = _RANK[1 : 1 + GAUSS_ORDER]
_FINE_AT = _RANK[1 + GAUSS_ORDER :]
_COARSE_WEIGHTS = _GAUSS_WEIGHTS / 2.0
_FINE_WEIGHTS = np.concatenate([_GAUSS_WEIGHTS, _GAUSS_WEIGHTS]) / 4.0
_NODES_PER_INTERVAL = _PATTERN.size


@dataclass(frozen=True)
class LineIntegral:
    """Result of :func:`integrate_line`.

    ``integrals`` has shape ``(n_integrated,) + batch + (len(breakpoints),)``
    and holds the integral from the origin to every breakpoint. ``samples``
    holds every field row at the breakpoints. ``tracker`` can be restarted at
    breakpoint positions.
    """

    integrals: NDArray[np.complex128]
    samples: NDArray[np.complex128]
    tracker: BranchTracker
    levels: int
    intervals: int


def _edges_after_refinement(
    edges: NDArray[np.float64], failing: NDArray[np.bool_]
) -> NDArray[np.float64]:
    midpoints = 0.5 * (edges[:-1] + edges[1:])
    return np.sort(np.concatenate([edges, midpoints[failing]]))


def integrate_line(  # noqa: PLR0913
    field: LineField,
    origin: ArrayLike,
    direction: ArrayLike,
    breakpoints: ArrayLike,
    tol: float,
    tracker: BranchTracker | None = None,
    *,
    n_integrated: int = 3,
    max_levels: int = DEFAULT_MAX_LEVELS,
) -> LineIntegral:
    """Integrate ``field`` along ``z(s) = origin + direction * s``.

    Every interval between consecutive breakpoints gets a 16-point rule and a
    two-panel 16-point rule; intervals whose estimates differ by more than
    ``tol * (1 + |estimate|)`` for any batch member are bisected and the whole
    path is sampled again, so square roots are always continued along one
    ordered path.

    Args:
        field: Field returning integrated rows first.
        origin: Start points, one per batch member.
        direction: Complex directions, one per batch member.
        breakpoints: Increasing real parameters starting at 0.
        tol: Relative tolerance per interval.
        tracker: Branch state at the origin; a fresh tracker when omitted.
        n_integrated: Number of leading rows that are integrated.
        max_levels: Bisection levels before giving up.

    Raises:
        QuadratureError: If some interval still fails after ``max_levels`` levels.

    """
    start = np.asarray(origin, dtype=np.complex128)
    step = np.broadcast_to(np.asarray(direction, dtype=np.complex128), start.shape)
    original = np.asarray(breakpoints, dtype=float)
    if original.ndim != 1 or original.size < 1 or original[0] != 0.0:
        msg = "breakpoints must be a 1-D increasing array starting at 0"
        raise ValueError(msg)
    if np.any(np.diff(original) <= 0.0):
        msg = "breakpoints must be strictly increasing"
        raise ValueError(msg)
    base_tracker = tracker if tracker is not None else BranchTracker()

    if original.size == 1:
        pass_tracker = base_tracker.fork()
        samples = field(start[..., None], pass_tracker)
        integrals = np.zeros((n_integrated, *start.shape, 1), dtype=np.complex128)
        return LineIntegral(integrals, samples, pass_tracker.subsample([0]), 0, 0)

    edges = original
    level = 0
    while True:
        lengths = np.diff(edges)
        count = lengths.size
        params = (edges[:-1, None] + lengths[:, None] * _PATTERN[None, :]).ravel()
        params = np.append(params, edges[-1])
        points = start[..., None] + step[..., None] * params
        pass_tracker = base_tracker.fork()
        values = field(points, pass_tracker)

        body = values[:n_integrated, ..., :-1].reshape(
            (n_integrated, *start.shape, count, _NODES_PER_INTERVAL)
        )
        coarse = (body[..., _COARSE_AT] @ _COARSE_WEIGHTS) * lengths
        fine = (body[..., _FINE_AT] @ _FINE_WEIGHTS) * lengths
        difference = np.sqrt(np.sum(np.abs(fine - coarse) ** 2, axis=0))
        magnitude = np.sqrt(np.sum(np.abs(fine) ** 2, axis=0))
        ratio = (difference / (1.0 + magnitude)).reshape(-1, count).max(axis=0) / tol
        failing = ratio > 1.0
        logger.debug(
            "Quadrature level %d: %d intervals, %d failing", level, count, int(failing.sum())
        )
        if not failing.any():
            break
        if level >= max_levels:
            raise QuadratureError(level, float(ratio.max() * tol))
        edges = _edges_after_refinement(edges, failing)
        level += 1

    scaled = fine * step[None, ..., None]
    cumulative = np.concatenate(
        [np.zeros((*scaled.shape[:-1], 1), dtype=np.complex128), np.cumsum(scaled, axis=-1)],
        axis=-1,
    )
    keep = np.searchsorted(edges, original)
    positions = np.append(np.arange(count) * _NODES_PER_INTERVAL, count * _NODES_PER_INTERVAL)
    sample_positions = positions[keep]
    return LineIntegral(
        integrals=cumulative[..., keep],
        samples=values[..., sample_positions],
        tracker=pass_tracker.subsample(sample_positions),
        levels=level,
        intervals=count,
    )
