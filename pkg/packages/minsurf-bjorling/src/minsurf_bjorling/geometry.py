"""Minimality residuals and curvature of curves drawn on a patch."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from minsurf_logging import get_logger

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from minsurf_bjorling.patch import SurfacePatch
    from minsurf_bjorling.strip import Strip

logger = get_logger("bjorling.geometry")

ZERO_CURVATURE = 1e-12

type PathFunction = Callable[[NDArray[np.float64]], NDArray[np.complex128]]


@dataclass(frozen=True)
class GeometryReport:
    """Residuals of the minimal-surface equations and of the Björling boundary data."""

    isotropy_max: float
    conformal_max: float
    laplacian_max: float
    boundary_curve_max: float
    boundary_normal_max: float

    def as_dict(self) -> dict[str, float]:
        return {
            "isotropy_max": self.isotropy_max,
            "conformal_max": self.conformal_max,
            "laplacian_max": self.laplacian_max,
            "boundary_curve_max": self.boundary_curve_max,
            "boundary_normal_max": self.boundary_normal_max,
        }


def _squared_norm(vectors: NDArray[np.complex128]) -> NDArray[np.float64]:
    return np.sum(np.abs(vectors) ** 2, axis=-1)


def laplacian_residual(patch: SurfacePatch) -> float:
    """Largest 5-point Laplacian of ``X`` scaled by ``diameter / max |f'|``."""
    if patch.grid.nu < 3 or patch.grid.nv < 3:  # noqa: PLR2004
        return 0.0
    hu, hv = patch.grid.spacing
    x = patch.x
    d_uu = (x[2:, 1:-1] - 2 * x[1:-1, 1:-1] + x[:-2, 1:-1]) / hu**2
    d_vv = (x[1:-1, 2:] - 2 * x[1:-1, 1:-1] + x[1:-1, :-2]) / hv**2
    laplacian = np.linalg.norm(d_uu + d_vv, axis=-1)
    peak = float(np.sqrt(_squared_norm(patch.fprime)).max())
    return float(laplacian.max()) * patch.grid.diameter / peak


def minimality_report(
    patch: SurfacePatch, strip: Strip | None = None, boundary_samples: int = 101
) -> GeometryReport:
    """Measure isotropy, conformality, harmonicity and the boundary conditions.

    Boundary residuals compare ``X(t)`` and ``N(t)`` on the real axis, at
    parameters inside the grid's u range, against ``c(t)`` and ``n(t)`` of
    ``strip`` (the patch's own strip when omitted).
    """
    strip = strip or patch.source.strip
    fprime = patch.fprime
    peak = float(_squared_norm(fprime).max())
    isotropy = float(np.abs(np.sum(fprime**2, axis=-1)).max()) / peak

    x_u, x_v = patch.x_u, patch.x_v
    e = np.sum(x_u * x_u, axis=-1)
    g = np.sum(x_v * x_v, axis=-1)
    f = np.sum(x_u * x_v, axis=-1)
    conformal = float(np.maximum(np.abs(e - g), np.abs(f)).max() / e.max())

    t = np.linspace(*patch.grid.u_range, boundary_samples)
    values = patch.source.values(t + 0j)
    x_u_axis, x_v_axis = values.fprime.real, -values.fprime.imag
    cross = np.cross(x_u_axis, x_v_axis)
    normal = cross / np.linalg.norm(cross, axis=-1, keepdims=True)
    curve_residual = np.linalg.norm(values.f.real - strip.curve.point(t).real, axis=-1)
    normal_residual = np.linalg.norm(normal - strip.normal_at(t), axis=-1)

    report = GeometryReport(
        isotropy_max=isotropy,
        conformal_max=conformal,
        laplacian_max=laplacian_residual(patch),
        boundary_curve_max=float(curve_residual.max()),
        boundary_normal_max=float(normal_residual.max()),
    )
    logger.info("Minimality report: %s", report.as_dict())
    return report


@dataclass(frozen=True)
class DomainPath:
    """Parametric path ``gamma(s)`` in the domain with its first two derivatives."""

    point: PathFunction
    velocity: PathFunction
    acceleration: PathFunction

    @classmethod
    def segment(cls, start: complex, end: complex) -> DomainPath:
        """Straight path ``start + (end - start) s`` for ``s`` in [0, 1]."""
        delta = end - start

        def point(s: NDArray[np.float64]) -> NDArray[np.complex128]:
            return start + delta * np.asarray(s, dtype=np.complex128)

        def velocity(s: NDArray[np.float64]) -> NDArray[np.complex128]:
            return np.full(np.shape(s), delta, dtype=np.complex128)

        def acceleration(s: NDArray[np.float64]) -> NDArray[np.complex128]:
            return np.zeros(np.shape(s), dtype=np.complex128)

        return cls(point=point, velocity=velocity, acceleration=acceleration)


@dataclass(frozen=True)
class CurveGeometry:
    """Per-sample curvature data; ``theta`` is NaN where the curve is straight."""

    parameters: NDArray[np.float64]
    curvature: NDArray[np.float64]
    geodesic_curvature: NDArray[np.float64]
    normal_curvature: NDArray[np.float64]
    theta: NDArray[np.float64]
    zero_curvature: NDArray[np.bool_]


def curve_on_surface_geometry(
    patch: SurfacePatch, gamma: DomainPath, samples: int = 101
) -> CurveGeometry:
    """Curvature, geodesic and normal curvature of ``X(gamma(s))`` for ``s`` in [0, 1].

    Derivatives come from ``f'`` and ``f''`` through the chain rule:
    ``c' = Re(f' gamma')`` and ``c'' = Re(f'' gamma'^2 + f' gamma'')``.
    """
    s = np.linspace(0.0, 1.0, samples)
    values = patch.source.values(gamma.point(s), second_order=True)
    fsecond = values.fsecond
    if fsecond is None:
        msg = "second-order evaluation returned no f''"
        raise RuntimeError(msg)
    d_gamma = gamma.velocity(s)[:, None]
    dd_gamma = gamma.acceleration(s)[:, None]
    velocity = (values.fprime * d_gamma).real
    acceleration = (fsecond * d_gamma**2 + values.fprime * dd_gamma).real

    x_u, x_v = values.fprime.real, -values.fprime.imag
    surface_normal = np.cross(x_u, x_v)
    surface_normal /= np.linalg.norm(surface_normal, axis=-1, keepdims=True)

    speed = np.linalg.norm(velocity, axis=-1)
    tangent = velocity / speed[:, None]
    curvature = np.linalg.norm(np.cross(velocity, acceleration), axis=-1) / speed**3
    normal_curvature = np.sum(acceleration * surface_normal, axis=-1) / speed**2
    conormal = np.cross(surface_normal, tangent)
    geodesic_curvature = np.sum(acceleration * conormal, axis=-1) / speed**2
    straight = curvature < ZERO_CURVATURE
    theta = np.where(straight, np.nan, np.arctan2(geodesic_curvature, normal_curvature))
    return CurveGeometry(
        parameters=s,
        curvature=curvature,
        geodesic_curvature=geodesic_curvature,
        normal_curvature=normal_curvature,
        theta=theta,
        zero_curvature=straight,
    )
