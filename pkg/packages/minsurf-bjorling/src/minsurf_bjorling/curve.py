"""Analytic space curves with cached first and second derivatives."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from minsurf_analytic import (
    AnalyticExpr,
    BranchTracker,
    contains_sqrt,
    differentiate,
    evaluate_many,
    parse_expr,
)

if TYPE_CHECKING:
    from collections.abc import Sequence

    from numpy.typing import ArrayLike, NDArray

type Triple = tuple[AnalyticExpr, AnalyticExpr, AnalyticExpr]

REAL_SAMPLES = 50
REAL_TOLERANCE = 1e-12
REGULARITY_EPSILON = 1e-10


def evaluate_vectors(
    exprs: Sequence[AnalyticExpr],
    points: ArrayLike,
    tracker: BranchTracker | None = None,
) -> NDArray[np.complex128]:
    """Evaluate expressions at ``points`` and put the component axis last.

    A fresh tracker is created when one of the expressions needs it.
    """
    if tracker is None and any(contains_sqrt(expr) for expr in exprs):
        tracker = BranchTracker()
    stacked = evaluate_many(exprs, np.asarray(points, dtype=np.complex128), tracker)
    return np.moveaxis(stacked, 0, -1)


def evaluate_real(exprs: Sequence[AnalyticExpr], t: ArrayLike) -> NDArray[np.float64]:
    """Evaluate at real, increasing samples and return the real parts."""
    return evaluate_vectors(exprs, np.asarray(t, dtype=float)).real


@dataclass(frozen=True)
class AnalyticCurve:
    """Curve ``c(t) = (x, y, z)`` whose components extend holomorphically."""

    x: AnalyticExpr
    y: AnalyticExpr
    z: AnalyticExpr
    first: Triple = field(init=False, repr=False)
    second: Triple = field(init=False, repr=False)

    def __post_init__(self) -> None:
        """Differentiate each component twice."""
        first = (differentiate(self.x), differentiate(self.y), differentiate(self.z))
        second = (differentiate(first[0]), differentiate(first[1]), differentiate(first[2]))
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)

    @classmethod
    def from_sources(cls, x: str, y: str, z: str = "0") -> AnalyticCurve:
        """Parse the three component expressions."""
        return cls(parse_expr(x), parse_expr(y), parse_expr(z))

    @property
    def components(self) -> Triple:
        return (self.x, self.y, self.z)

    def point(self, t: ArrayLike, tracker: BranchTracker | None = None) -> NDArray[np.complex128]:
        return evaluate_vectors(self.components, t, tracker)

    def velocity(self, t: ArrayLike, tracker: BranchTracker | None = None) -> NDArray[np.complex128]:
        return evaluate_vectors(self.first, t, tracker)

    def acceleration(
        self, t: ArrayLike, tracker: BranchTracker | None = None
    ) -> NDArray[np.complex128]:
        return evaluate_vectors(self.second, t, tracker)

    def frenet(self, t: ArrayLike) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Return unit tangents and curvature at real, increasing samples."""
        velocity = evaluate_real(self.first, t)
        acceleration = evaluate_real(self.second, t)
        speed = np.linalg.norm(velocity, axis=-1)
        tangent = velocity / speed[..., None]
        curvature = np.linalg.norm(np.cross(velocity, acceleration), axis=-1) / speed**3
        return tangent, curvature

    def imaginary_residual(
        self, interval: tuple[float, float] = (-1.0, 1.0), samples: int = REAL_SAMPLES
    ) -> float:
        """Largest imaginary part of the components on real samples."""
        t = np.linspace(*interval, samples)
        return float(np.abs(evaluate_vectors(self.components, t).imag).max())

    def irregular_parameters(
        self, interval: tuple[float, float] = (-1.0, 1.0), samples: int = 200
    ) -> NDArray[np.float64]:
        """Sample parameters where ``|c'(t)|`` drops to 1e-10 or below."""
        t = np.linspace(*interval, samples)
        speed = np.linalg.norm(evaluate_real(self.first, t), axis=-1)
        return t[speed <= REGULARITY_EPSILON]
