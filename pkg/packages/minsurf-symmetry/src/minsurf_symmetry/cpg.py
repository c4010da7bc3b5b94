"""Conjugated perpendicular geodesics and the self-CPG relation."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from minsurf_bjorling import SymmetricCurveReport
from minsurf_logging import get_logger

from minsurf_symmetry.exceptions import CpgPlanarityError
from minsurf_symmetry.matrices import LAMBDA
from minsurf_symmetry.reports import SymmetryReport
from minsurf_symmetry.sampling import (
    axis_extent,
    axis_samples,
    line_distance,
    max_distance,
    principal_axes,
)

if TYPE_CHECKING:
    from minsurf_bjorling import SurfacePatch
    from numpy.typing import NDArray

logger = get_logger("symmetry.cpg")

DEGENERACY_EPSILON = 1e-10
SIGNS = (1, -1)
DIAGONAL_PLUS = np.array([0.0, 1.0, 1.0])
DIAGONAL_MINUS = np.array([0.0, 1.0, -1.0])


@dataclass(frozen=True)
class CpgExtraction:
    """Samples of ``ĉ(t) = X(it)`` and their parity report about the X-axis."""

    parameters: NDArray[np.float64]
    points: NDArray[np.float64]
    report: SymmetricCurveReport
    planarity_residual: float

    def as_record(self) -> dict[str, object]:
        return {
            "parameters": self.parameters.tolist(),
            "points": self.points.tolist(),
            "planarity_residual": self.planarity_residual,
            "symmetry_residual": self.report.symmetry_residual,
            "tangent_residual": self.report.tangent_residual,
            "degenerate": self.report.degenerate,
        }


def extract_cpg(patch: SurfacePatch, t_samples: int = 41, tol: float = 1e-8) -> CpgExtraction:
    """Sample ``X(it)`` on the imaginary axis and check it is a symmetric curve in the XZ-plane.

    Raises:
        GridSymmetryError: If the grid holds no segment of the imaginary axis around 0.
        CpgPlanarityError: If ``|y|`` exceeds ``tol``.

    """
    t = axis_samples(axis_extent(patch.grid, real=False), t_samples)
    values = patch.source.values(1j * t, second_order=True)
    points = values.f.real
    planarity = float(np.abs(points[:, 1]).max())
    if planarity > tol:
        raise CpgPlanarityError(planarity, tol)

    fsecond = values.fsecond
    if fsecond is None:
        msg = "second-order evaluation returned no f''"
        raise RuntimeError(msg)
    vertex = t.size // 2
    mirrored = points[::-1]
    parity = np.maximum(
        np.abs(points[:, 0] - mirrored[:, 0]), np.abs(points[:, 2] + mirrored[:, 2])
    )
    # d/dt X(it) = Re(i f'(it)) and d²/dt² X(it) = Re(-f''(it)).
    tangent = (1j * values.fprime[vertex]).real
    second = (-fsecond[vertex]).real
    report = SymmetricCurveReport(
        vertex_parameter=0.0,
        vertex_point=(
            float(points[vertex, 0]),
            float(points[vertex, 1]),
            float(points[vertex, 2]),
        ),
        symmetry_residual=float(parity.max()),
        tangent_residual=abs(float(tangent[0])),
        second_derivative_at_vertex=(float(second[0]), float(second[1]), float(second[2])),
    )
    logger.info(
        "CPG extracted: %d samples, planarity %.3e, parity %.3e",
        t.size,
        planarity,
        report.symmetry_residual,
    )
    return CpgExtraction(parameters=t, points=points, report=report, planarity_residual=planarity)


def _degenerate_vertex(patch: SurfacePatch) -> bool:
    values = patch.source.values(np.zeros(1), second_order=True)
    if values.fsecond is None:
        return True
    speed = float(np.linalg.norm(values.fprime[0].real))
    bending = float(np.linalg.norm(values.fsecond[0].real))
    return speed <= DEGENERACY_EPSILON or bending <= DEGENERACY_EPSILON * max(speed, 1.0)


def _best_signed_match(
    target: NDArray[np.float64], source: NDArray[np.float64]
) -> tuple[float, int, int]:
    """Minimize ``max |target(t) - s Λ source(σt)|`` over ``σ, s`` in ``{1, -1}``."""
    candidates: list[tuple[float, int, int]] = []
    for sigma, sign in itertools.product(SIGNS, SIGNS):
        oriented = source if sigma == 1 else source[::-1]
        candidates.append((max_distance(target, sign * oriented @ LAMBDA.T), sigma, sign))
    return min(candidates, key=lambda item: item[0])


def self_cpg_test(patch: SurfacePatch, tol: float = 1e-8, samples: int = 41) -> SymmetryReport:
    """Test ``X(it) = s Λ X(σt)`` for the best ``σ, s``.

    Data with ``c''(0) = 0`` or ``c'(0) = 0`` is reported as not applicable.
    """
    if _degenerate_vertex(patch):
        logger.info("self_cpg: degenerate vertex, not applicable")
        return SymmetryReport(
            relation="self_cpg",
            residual=math.inf,
            tolerance=tol,
            passes=False,
            applicable=False,
            details={"reason": "c''(0) vanishes"},
        )
    extent = axis_extent(patch.grid)
    t = axis_samples(extent, samples)
    values = patch.source.values(np.concatenate([1j * t, t + 0j])).f.real
    imaginary, real = values[: t.size], values[t.size :]
    raw, sigma, sign = _best_signed_match(imaginary, real)
    residual = raw / patch.scale
    logger.info("self_cpg: residual %.3e with sigma=%d s=%d", residual, sigma, sign)
    return SymmetryReport(
        relation="self_cpg",
        residual=residual,
        tolerance=tol,
        passes=residual <= tol,
        sigma=sigma,
        sign=sign,
        details={"raw_residual": raw, "extent": extent},
    )


def _direction_cosine(first: NDArray[np.float64], second: NDArray[np.float64]) -> float:
    norms = float(np.linalg.norm(first) * np.linalg.norm(second))
    if norms == 0.0:
        return math.nan
    return abs(float(first @ second)) / norms


def diagonal_line_test(patch: SurfacePatch, tol: float = 1e-8, samples: int = 41) -> SymmetryReport:
    """Test that ``X(t + it)`` and ``X(t - it)`` lie on the lines ``(0, y, y)`` and ``(0, y, -y)``.

    Either assignment of the two diagonals to the two lines is accepted; the
    report also carries the cosine between the principal directions of the
    two image curves.
    """
    extent = axis_extent(patch.grid)
    t = axis_samples(extent, samples)
    values = patch.source.values(np.concatenate([(1 + 1j) * t, (1 - 1j) * t])).f.real
    plus, minus = values[: t.size], values[t.size :]
    straight = max(line_distance(plus, DIAGONAL_PLUS), line_distance(minus, DIAGONAL_MINUS))
    crossed = max(line_distance(plus, DIAGONAL_MINUS), line_distance(minus, DIAGONAL_PLUS))
    raw, orientation = (
        (straight, "t+it->(0,y,y)") if straight <= crossed else (crossed, "t+it->(0,y,-y)")
    )
    _, plus_axes = principal_axes(plus)
    _, minus_axes = principal_axes(minus)
    cosine = _direction_cosine(plus_axes[0], minus_axes[0])
    residual = raw / patch.scale
    logger.info("diagonal_lines: residual %.3e (%s)", residual, orientation)
    return SymmetryReport(
        relation="diagonal_lines",
        residual=residual,
        tolerance=tol,
        passes=residual <= tol,
        orientation=orientation,
        details={"raw_residual": raw, "direction_cosine": cosine, "extent": extent},
    )


def _planarity(points: NDArray[np.float64]) -> float:
    singular, _ = principal_axes(points)
    if singular[0] == 0.0:
        return 0.0
    return float(singular[-1] / singular[0])


def adjoint_cpg_test(patch: SurfacePatch, tol: float = 1e-8, samples: int = 41) -> SymmetryReport:
    """Check the adjoint's diagonal curves ``c*(t) = X*(t + it)`` and ``ĉ*(t) = X*(t - it)``.

    Both must be planar, perpendicular at ``t = 0`` and related by
    ``ĉ*(t) = s Λ c*(σt)``. The reported residual is the largest of the
    planarity ratios, the tangent cosine and the scaled relation residual.
    """
    extent = axis_extent(patch.grid)
    t = axis_samples(extent, samples)
    adjoint = patch.source.adjoint()
    points = np.concatenate([(1 + 1j) * t, (1 - 1j) * t, [0j]])
    values = adjoint.values(points)
    curves = values.f.real
    c_star, c_hat = curves[: t.size], curves[t.size : 2 * t.size]
    origin_derivative = values.fprime[-1]
    cosine = _direction_cosine(
        (origin_derivative * (1 + 1j)).real, (origin_derivative * (1 - 1j)).real
    )
    planarity = max(_planarity(c_star), _planarity(c_hat))
    raw, sigma, sign = _best_signed_match(c_hat, c_star)
    relation = raw / patch.scale
    residual = max(planarity, relation, 0.0 if math.isnan(cosine) else cosine)
    passes = residual <= tol and not math.isnan(cosine)
    logger.info(
        "adjoint_cpg: planarity %.3e, cosine %.3e, relation %.3e", planarity, cosine, relation
    )
    return SymmetryReport(
        relation="adjoint_cpg",
        residual=residual,
        tolerance=tol,
        passes=passes,
        sigma=sigma,
        sign=sign,
        details={
            "planarity": planarity,
            "tangent_cosine": cosine,
            "relation_residual": relation,
            "raw_residual": raw,
        },
    )
