"""Sampled congruence between two evaluated patches.

Samples are matched by parameter: identical grids pair node with node, and
otherwise the second patch is re-evaluated at the nodes of the first that lie
inside its own domain. Each sample set is moved to a frame at its vertex (the
matched sample nearest the centre of the shared nodes) and aligned with its
principal axes before the orthogonal fit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from minsurf_logging import get_logger

from minsurf_symmetry.exceptions import DomainOverlapError
from minsurf_symmetry.registration import fit_orthogonal
from minsurf_symmetry.reports import CongruenceResult

if TYPE_CHECKING:
    from minsurf_bjorling import SurfacePatch
    from numpy.typing import NDArray

logger = get_logger("symmetry.congruence")

MIN_SHARED_NODES = 3


@dataclass(frozen=True)
class MatchedSamples:
    """Corresponding surface points of two patches and their parameters."""

    first: NDArray[np.float64]
    second: NDArray[np.float64]
    nodes: NDArray[np.complex128]
    resampled: bool


@dataclass(frozen=True)
class PrincipalFrame:
    """Origin at a vertex sample; columns of ``axes`` are the principal axes."""

    vertex: NDArray[np.float64]
    axes: NDArray[np.float64]

    def to_local(self, points: NDArray[np.float64]) -> NDArray[np.float64]:
        return (points - self.vertex) @ self.axes


def match_samples(first: SurfacePatch, second: SurfacePatch) -> MatchedSamples:
    """Pair the samples of ``first`` with points of ``second`` at the same parameter.

    Raises:
        DomainOverlapError: If fewer than ``MIN_SHARED_NODES`` nodes of
            ``first`` lie inside the domain of ``second``.

    """
    nodes = first.grid.points()
    if first.grid == second.grid:
        return MatchedSamples(
            first=first.x.reshape(-1, 3),
            second=second.x.reshape(-1, 3),
            nodes=nodes.ravel(),
            resampled=False,
        )
    inside = second.grid.contains(nodes)
    shared = int(inside.sum())
    if shared < MIN_SHARED_NODES:
        raise DomainOverlapError(shared, MIN_SHARED_NODES)
    logger.debug("Resampling the second patch at %d shared nodes", shared)
    values = second.source.values(nodes[inside])
    return MatchedSamples(
        first=first.x[inside],
        second=values.f.real,
        nodes=nodes[inside],
        resampled=True,
    )


def principal_frame(points: NDArray[np.float64], vertex_index: int) -> PrincipalFrame:
    """Frame at ``points[vertex_index]`` spanned by the principal axes of ``points``.

    Each axis is signed so that its largest component is positive.
    """
    centered = points - points.mean(axis=0)
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    axes = vt.T
    signs = np.sign(axes[np.argmax(np.abs(axes), axis=0), np.arange(axes.shape[1])])
    signs[signs == 0] = 1.0
    return PrincipalFrame(vertex=points[vertex_index], axes=axes * signs)


def congruence_test(
    first: SurfacePatch,
    second: SurfacePatch,
    *,
    allow_scale: bool = False,
    tol: float = 1e-8,
) -> CongruenceResult:
    """Register ``second`` onto ``first`` over parameter-matched samples.

    A rigid fit (scale exactly 1) tests equivalence; ``allow_scale`` tests
    congruence up to a similarity. Passing is a sampled check on the matched
    nodes, not a proof that the surfaces are congruent.

    Raises:
        DomainOverlapError: If the patch domains share too few nodes.
        DegeneratePointSetError: If the first patch spans fewer than two dimensions.

    """
    samples = match_samples(first, second)
    centre = samples.nodes.mean()
    vertex_index = int(np.argmin(np.abs(samples.nodes - centre)))
    frame_a = principal_frame(samples.first, vertex_index)
    frame_b = principal_frame(samples.second, vertex_index)

    local = fit_orthogonal(
        frame_a.to_local(samples.first),
        frame_b.to_local(samples.second),
        allow_scale=allow_scale,
    )
    rotation = frame_b.axes @ local.rotation @ frame_a.axes.T
    translation = (
        frame_b.vertex - local.scale * rotation @ frame_a.vertex + frame_b.axes @ local.translation
    )
    passes = local.rms <= tol * first.scale
    logger.info(
        "Congruence over %d samples%s: rms %.3e, scale %.6g, %s",
        samples.first.shape[0],
        " (resampled)" if samples.resampled else "",
        local.rms,
        local.scale,
        passes,
    )
    return CongruenceResult(
        rotation=rotation,
        translation=translation,
        scale=local.scale,
        residual=local.rms,
        tolerance=tol,
        passes=passes,
    )
