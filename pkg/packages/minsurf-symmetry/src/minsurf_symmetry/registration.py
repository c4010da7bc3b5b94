"""Least-squares orthogonal registration of corresponding point sets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from minsurf_logging import get_logger

from minsurf_symmetry.exceptions import DegeneratePointSetError

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

logger = get_logger("symmetry.registration")

RANK_TOLERANCE = 1e-10
MIN_RANK = 2


@dataclass(frozen=True)
class RegistrationFit:
    """``target ≈ scale * rotation @ source + translation``; ``rms`` is the raw residual."""

    rotation: NDArray[np.float64]
    translation: NDArray[np.float64]
    scale: float
    rms: float
    singular_values: NDArray[np.float64]

    def apply(self, points: ArrayLike) -> NDArray[np.float64]:
        return self.scale * np.asarray(points, dtype=float) @ self.rotation.T + self.translation

    @property
    def orthogonality_error(self) -> float:
        return float(np.abs(self.rotation.T @ self.rotation - np.eye(3)).max())


def covariance_rank(points: NDArray[np.float64]) -> int:
    centered = points - points.mean(axis=0)
    singular = np.linalg.svd(centered, compute_uv=False)
    if singular.size == 0 or singular[0] == 0.0:
        return 0
    return int(np.sum(singular > RANK_TOLERANCE * singular[0]))


def fit_orthogonal(
    source: ArrayLike,
    target: ArrayLike,
    *,
    proper: bool = False,
    allow_scale: bool = False,
) -> RegistrationFit:
    """Fit an orthogonal map, translation and optional scale by SVD.

    Reflections are allowed unless ``proper`` is set. With ``allow_scale``
    the Umeyama scale is fitted, otherwise the scale is exactly 1.

    Raises:
        ValueError: If the arrays are not matching ``(N, 3)`` point lists.
        DegeneratePointSetError: If the source spans fewer than two dimensions.

    """
    a = np.asarray(source, dtype=float).reshape(-1, 3)
    b = np.asarray(target, dtype=float).reshape(-1, 3)
    if a.shape != b.shape:
        msg = f"point sets differ in shape: {a.shape} vs {b.shape}"
        raise ValueError(msg)
    rank = covariance_rank(a)
    if rank < MIN_RANK:
        raise DegeneratePointSetError(rank)

    centroid_a = a.mean(axis=0)
    centroid_b = b.mean(axis=0)
    centered_a = a - centroid_a
    centered_b = b - centroid_b
    u, singular, vt = np.linalg.svd(centered_a.T @ centered_b)
    correction = np.ones(3)
    if proper and np.linalg.det(vt.T @ u.T) < 0:
        correction[-1] = -1.0
    rotation = vt.T @ np.diag(correction) @ u.T
    scale = 1.0
    if allow_scale:
        scale = float(np.sum(singular * correction) / np.sum(centered_a**2))
    translation = centroid_b - scale * rotation @ centroid_a
    residual = b - (scale * a @ rotation.T + translation)
    rms = float(np.sqrt(np.mean(np.sum(residual**2, axis=-1))))
    logger.debug("Registration singular values %s, rms %.3e", singular, rms)
    return RegistrationFit(
        rotation=rotation,
        translation=translation,
        scale=scale,
        rms=rms,
        singular_values=singular,
    )
