"""Schwarz reflections across planar geodesics and rotations about straight lines."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from minsurf_logging import get_logger

from minsurf_symmetry.matrices import AXIS_ROTATION, LAMBDA_SQUARED_T, T
from minsurf_symmetry.reports import SymmetryReport
from minsurf_symmetry.sampling import max_distance, principal_axes, require_symmetric

if TYPE_CHECKING:
    from minsurf_bjorling import SurfacePatch
    from numpy.typing import NDArray

logger = get_logger("symmetry.reflections")


def _verdict(
    relation: str, raw: float, patch: SurfacePatch, tol: float, **details: float | str
) -> SymmetryReport:
    residual = raw / patch.scale
    report = SymmetryReport(
        relation=relation,
        residual=residual,
        tolerance=tol,
        passes=residual <= tol,
        details={"raw_residual": raw, **details},
    )
    logger.info("%s: residual %.3e (%s)", relation, residual, "pass" if report.passes else "fail")
    return report


def reflection_checks(patch: SurfacePatch, tol: float = 1e-8) -> list[SymmetryReport]:
    """Compare ``X(conj w)`` with ``T X(w)`` and ``X(-conj w)`` with ``Λ²T X(w)`` on all nodes.

    Raises:
        GridSymmetryError: If the grid is not symmetric about both axes.

    """
    require_symmetric(patch.grid)
    x = patch.x
    conjugate = max_distance(x[:, ::-1], x @ T.T)
    mirrored = max_distance(x[::-1, :], x @ LAMBDA_SQUARED_T.T)
    return [
        _verdict("reflection_T", conjugate, patch, tol),
        _verdict("reflection_lambda2_T", mirrored, patch, tol),
    ]


def axis_rotation_check(adjoint: SurfacePatch, tol: float = 1e-8) -> SymmetryReport:
    """Half-turn about the z-axis: ``X*(conj w) = diag(-1, -1, 1) X*(w)``.

    Holds for the adjoint of planar strips with ``phi = pi/2``, whose real
    axis is mapped onto the z-axis.

    Raises:
        GridSymmetryError: If the v range is not symmetric.

    """
    require_symmetric(adjoint.grid, u=False)
    x = adjoint.x
    return _verdict("axis_rotation", max_distance(x[:, ::-1], x @ AXIS_ROTATION), adjoint, tol)


def straight_arc_test(
    adjoint: SurfacePatch, tol: float = 1e-8, samples: int = 101
) -> SymmetryReport:
    """Collinearity of the image of the real axis under ``adjoint``."""
    t = np.linspace(*adjoint.grid.u_range, samples)
    points: NDArray[np.float64] = adjoint.source.values(t + 0j).f.real
    singular, axes = principal_axes(points)
    centered = points - points.mean(axis=0)
    along = (centered @ axes[0])[:, None] * axes[0]
    raw = max_distance(centered, along) if singular[0] > 0.0 else 0.0
    direction = axes[0]
    return _verdict(
        "straight_arc",
        raw,
        adjoint,
        tol,
        direction=", ".join(f"{value:.6g}" for value in direction),
    )
