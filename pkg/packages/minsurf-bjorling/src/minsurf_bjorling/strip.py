"""Björling strips: construction, rigid motions, validation and parity checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from minsurf_analytic import (
    ZERO,
    AnalyticExpr,
    add,
    call,
    constant,
    differentiate,
    div,
    from_polynomial,
    mul,
    neg,
    polynomial_sqrt,
    sub,
    to_polynomial,
)
from minsurf_logging import get_logger

from minsurf_bjorling.curve import AnalyticCurve, Triple, evaluate_real, evaluate_vectors
from minsurf_bjorling.exceptions import (
    DegenerateFrameError,
    NonPlanarCurveError,
    NotPerpendicularSymmetricError,
    StripError,
)

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

logger = get_logger("bjorling.strip")

HALF_PI = math.pi / 2
DEGENERACY_EPSILON = 1e-10
PLANARITY_TOLERANCE = 1e-12


def cross(a: Triple, b: Triple) -> Triple:
    """Symbolic cross product of two expression triples."""
    return (
        sub(mul(a[1], b[2]), mul(a[2], b[1])),
        sub(mul(a[2], b[0]), mul(a[0], b[2])),
        sub(mul(a[0], b[1]), mul(a[1], b[0])),
    )


def _linear_map(matrix: NDArray[np.float64], triple: Triple) -> Triple:
    rows: list[AnalyticExpr] = []
    for row in matrix:
        acc: AnalyticExpr = ZERO
        for coefficient, expr in zip(row, triple, strict=True):
            acc = add(acc, mul(constant(float(coefficient)), expr))
        rows.append(acc)
    return (rows[0], rows[1], rows[2])


@dataclass(frozen=True)
class PlanarFrame:
    """Frame data of a strip built from a curve in the XY-plane.

    ``sigma`` orients the in-plane normal, ``speed`` is ``|c'|`` as an
    expression, and ``pythagorean`` tells whether that speed is polynomial.
    """

    sigma: int
    phi: float
    speed: AnalyticExpr
    pythagorean: bool
    in_plane_normal: Triple
    binormal: Triple


@dataclass(frozen=True)
class Strip:
    """A curve with a unit normal field and the integrand ``n x c'``."""

    curve: AnalyticCurve
    normal: Triple
    integrand: Triple
    frame: PlanarFrame | None = None
    integrand_derivative: Triple = field(init=False, repr=False)

    def __post_init__(self) -> None:
        """Differentiate the integrand once for second-order evaluations."""
        derivative = tuple(differentiate(component) for component in self.integrand)
        object.__setattr__(self, "integrand_derivative", derivative)

    @property
    def planar(self) -> bool:
        return self.frame is not None

    @property
    def phi(self) -> float | None:
        return None if self.frame is None else self.frame.phi

    def normal_at(self, t: ArrayLike) -> NDArray[np.float64]:
        """Normal vectors at real, increasing samples."""
        return evaluate_real(self.normal, t)


def make_strip(curve: AnalyticCurve, normal: Triple) -> Strip:
    """Build a strip from explicit normal expressions; run :func:`validate_strip` to check it."""
    return Strip(curve=curve, normal=normal, integrand=cross(normal, curve.first))


def _speed(curve: AnalyticCurve) -> tuple[AnalyticExpr, bool]:
    dx, dy, _ = curve.first
    px, py = to_polynomial(dx), to_polynomial(dy)
    if px is not None and py is not None:
        root = polynomial_sqrt(px * px + py * py)
        if root is not None:
            return from_polynomial(root), True
    return call("sqrt", add(mul(dx, dx), mul(dy, dy))), False


def _assert_planar(curve: AnalyticCurve) -> None:
    z_poly = to_polynomial(curve.z)
    if z_poly is not None:
        residual = float(np.abs(z_poly.coef).max())
    else:
        residual = float(np.abs(evaluate_vectors([curve.z], np.linspace(-1.0, 1.0, 50))).max())
    if residual > PLANARITY_TOLERANCE:
        raise NonPlanarCurveError(residual)


def make_planar_strip(curve: AnalyticCurve, phi: float = HALF_PI) -> Strip:
    """Build the strip ``n = b cos(phi) + n_in sin(phi)`` for a curve in the XY-plane.

    The in-plane normal is ``sigma (y', -x', 0) / |c'|`` with ``sigma`` chosen
    so that it points away from the centre of curvature at ``t = 0``. The
    binormal ``n_in x t`` is then the constant ``sigma e_z``. The integrand is
    built without dividing by ``|c'|``:
    ``g = sigma cos(phi) (-y', x', 0) + sigma sin(phi) |c'| e_z``.

    Raises:
        NonPlanarCurveError: If ``z`` is not identically zero.
        DegenerateFrameError: If ``c''(0)`` has no normal component and
            ``phi != pi/2``.
        StripError: If ``phi`` lies outside ``(-pi/2, pi/2]``.

    """
    if not -HALF_PI < phi <= HALF_PI:
        msg = f"phi must lie in (-pi/2, pi/2], got {phi}"
        raise StripError(msg, phi=phi)
    _assert_planar(curve)

    speed, pythagorean = _speed(curve)
    velocity = curve.velocity(0.0).real
    acceleration = curve.acceleration(0.0).real
    bending = velocity[1] * acceleration[0] - velocity[0] * acceleration[1]
    speed_at_vertex = float(np.linalg.norm(velocity))
    if abs(bending) <= DEGENERACY_EPSILON * max(speed_at_vertex, 1.0):
        if phi != HALF_PI:
            raise DegenerateFrameError(phi)
        logger.warning("c''(0) is degenerate; using the default frame orientation")
        sigma = 1
    else:
        sigma = 1 if bending < 0 else -1

    sin_phi, cos_phi = (1.0, 0.0) if phi == HALF_PI else (math.sin(phi), math.cos(phi))
    dx, dy, _ = curve.first
    in_plane = (
        div(mul(constant(sigma), dy), speed),
        div(mul(constant(-sigma), dx), speed),
        ZERO,
    )
    binormal = (ZERO, ZERO, constant(sigma))
    normal = (
        mul(constant(sin_phi), in_plane[0]),
        mul(constant(sin_phi), in_plane[1]),
        constant(sigma * cos_phi),
    )
    integrand = (
        mul(constant(sigma * cos_phi), neg(dy)),
        mul(constant(sigma * cos_phi), dx),
        mul(constant(sigma * sin_phi), speed),
    )
    frame = PlanarFrame(
        sigma=sigma,
        phi=phi,
        speed=speed,
        pythagorean=pythagorean,
        in_plane_normal=in_plane,
        binormal=binormal,
    )
    logger.debug("Planar strip: sigma=%d phi=%g pythagorean=%s", sigma, phi, pythagorean)
    return Strip(curve=curve, normal=normal, integrand=integrand, frame=frame)


def transform_strip(
    strip: Strip, rotation: ArrayLike, translation: ArrayLike = (0.0, 0.0, 0.0)
) -> Strip:
    """Apply ``x -> Q x + b`` to the strip.

    The normal maps to ``Q n`` and the integrand to ``det(Q) Q g``, so the
    transformed surface is the image of the original one under the motion.
    """
    matrix = np.asarray(rotation, dtype=float)
    offset = np.asarray(translation, dtype=float)
    if matrix.shape != (3, 3) or not np.allclose(matrix.T @ matrix, np.eye(3), atol=1e-12):
        msg = "rotation must be an orthogonal 3x3 matrix"
        raise StripError(msg)
    moved = _linear_map(matrix, strip.curve.components)
    curve = AnalyticCurve(*(add(expr, constant(b)) for expr, b in zip(moved, offset, strict=True)))
    determinant = float(np.linalg.det(matrix))
    return Strip(
        curve=curve,
        normal=_linear_map(matrix, strip.normal),
        integrand=_linear_map(determinant * matrix, strip.integrand),
    )


@dataclass(frozen=True)
class StripValidation:
    """Sampled unit-norm and orthogonality residuals of a strip."""

    unit_norm_max: float
    orthogonality_max: float
    min_speed: float
    tolerance: float
    samples: int

    @property
    def passes(self) -> bool:
        return (
            self.unit_norm_max <= self.tolerance
            and self.orthogonality_max <= self.tolerance
            and self.min_speed > DEGENERACY_EPSILON
        )


def validate_strip(
    strip: Strip,
    n_samples: int = 200,
    tol: float = 1e-10,
    interval: tuple[float, float] = (-1.0, 1.0),
) -> StripValidation:
    """Check ``|n| = 1`` and ``<c', n> = 0`` on real samples; never raises."""
    t = np.linspace(*interval, n_samples)
    values = evaluate_vectors((*strip.curve.first, *strip.normal), t).real
    velocity, normal = values[:, :3], values[:, 3:]
    speed = np.linalg.norm(velocity, axis=-1)
    unit = np.abs(np.linalg.norm(normal, axis=-1) - 1.0)
    orthogonal = np.abs(np.einsum("ij,ij->i", velocity, normal)) / np.maximum(speed, 1e-300)
    report = StripValidation(
        unit_norm_max=float(unit.max()),
        orthogonality_max=float(orthogonal.max()),
        min_speed=float(speed.min()),
        tolerance=tol,
        samples=n_samples,
    )
    logger.debug("Strip validation: %s", report)
    return report


@dataclass(frozen=True)
class SymmetricCurveReport:
    """Parity residuals and vertex data of a curve about the X-axis."""

    vertex_parameter: float
    vertex_point: tuple[float, float, float]
    symmetry_residual: float
    tangent_residual: float
    second_derivative_at_vertex: tuple[float, float, float]

    @property
    def degenerate(self) -> bool:
        return float(np.linalg.norm(self.second_derivative_at_vertex)) <= DEGENERACY_EPSILON


def check_perpendicular_symmetric(
    curve: AnalyticCurve,
    samples: int = 50,
    tol: float = 1e-10,
    interval: tuple[float, float] = (0.0, 1.0),
) -> SymmetricCurveReport:
    """Check ``x(-t) = x(t)``, ``y(-t) = -y(t)`` and ``z = 0`` about the vertex ``t = 0``.

    Raises:
        NotPerpendicularSymmetricError: If a parity residual or ``<c'(0), e_x>``
            exceeds ``tol``.

    """
    t = np.linspace(*interval, samples)
    forward = evaluate_real(curve.components, t)
    backward = evaluate_real(curve.components, -t)
    parity = np.stack(
        [
            np.abs(forward[:, 0] - backward[:, 0]),
            np.abs(forward[:, 1] + backward[:, 1]),
            np.abs(forward[:, 2]),
            np.abs(backward[:, 2]),
        ]
    )
    vertex = curve.point(0.0).real
    tangent = curve.velocity(0.0).real
    second = curve.acceleration(0.0).real
    report = SymmetricCurveReport(
        vertex_parameter=0.0,
        vertex_point=(float(vertex[0]), float(vertex[1]), float(vertex[2])),
        symmetry_residual=float(parity.max()),
        tangent_residual=abs(float(tangent[0])),
        second_derivative_at_vertex=(float(second[0]), float(second[1]), float(second[2])),
    )
    worst = max(report.symmetry_residual, report.tangent_residual)
    if worst > tol:
        raise NotPerpendicularSymmetricError(worst, tol)
    return report
