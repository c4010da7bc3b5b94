"""The isotropic curve ``f(w) = c(w) - i * integral of n x c' from w0 to w``."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

import numpy as np
from minsurf_analytic import BranchTracker, evaluate_many

from minsurf_bjorling.quadrature import DEFAULT_MAX_LEVELS, integrate_line

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from minsurf_bjorling.strip import Strip

DEFAULT_RAY_STEP = 0.1
VALUE_CHUNK = 512


@dataclass(frozen=True)
class IsotropicValues:
    """``f``, ``f'`` and optionally ``f''`` with the component axis last."""

    f: NDArray[np.complex128]
    fprime: NDArray[np.complex128]
    fsecond: NDArray[np.complex128] | None = None


@dataclass(frozen=True)
class IsotropicCurve:
    """Schwarz solution of a strip, evaluated on demand at arbitrary points.

    Values at a point come from a straight ray out of ``base_point``.
    ``phase`` multiplies ``f``; the adjoint surface uses ``-1j``.
    """

    strip: Strip
    base_point: complex = 0j
    quad_tol: float = 1e-10
    phase: complex = 1 + 0j
    ray_step: float = DEFAULT_RAY_STEP
    max_levels: int = DEFAULT_MAX_LEVELS

    def field(
        self, points: NDArray[np.complex128], tracker: BranchTracker, *, second_order: bool = False
    ) -> NDArray[np.complex128]:
        """Rows ``g, c, c'`` (and ``c'', g'`` for second order) at ``points``."""
        exprs = [*self.strip.integrand, *self.strip.curve.components, *self.strip.curve.first]
        if second_order:
            exprs += [*self.strip.curve.second, *self.strip.integrand_derivative]
        return evaluate_many(exprs, points, tracker)

    def adjoint(self) -> IsotropicCurve:
        return replace(self, phase=self.phase * -1j)

    def values(self, points: ArrayLike, *, second_order: bool = False) -> IsotropicValues:
        """Evaluate ``f`` and its derivatives at ``points`` of any shape.

        Points are integrated in chunks of ``VALUE_CHUNK`` rays.
        """
        targets = np.asarray(points, dtype=np.complex128)
        flat = targets.ravel()
        if flat.size > VALUE_CHUNK:
            parts = [
                self.values(flat[start : start + VALUE_CHUNK], second_order=second_order)
                for start in range(0, flat.size, VALUE_CHUNK)
            ]
            return _join(parts, targets.shape)
        offsets = flat - self.base_point
        reach = float(np.abs(offsets).max()) if flat.size else 0.0
        pieces = max(1, math.ceil(reach / self.ray_step))

        def field(z: NDArray[np.complex128], tracker: BranchTracker) -> NDArray[np.complex128]:
            return self.field(z, tracker, second_order=second_order)

        result = integrate_line(
            field,
            np.full(flat.shape, self.base_point, dtype=np.complex128),
            offsets,
            np.linspace(0.0, 1.0, pieces + 1),
            self.quad_tol,
            max_levels=self.max_levels,
        )
        end = result.samples[..., -1]
        integral = result.integrals[..., -1]
        f = end[3:6] - 1j * integral
        fprime = end[6:9] - 1j * end[0:3]
        fsecond = end[9:12] - 1j * end[12:15] if second_order else None

        def shaped(rows: NDArray[np.complex128]) -> NDArray[np.complex128]:
            return (self.phase * np.moveaxis(rows, 0, -1)).reshape((*targets.shape, 3))

        return IsotropicValues(
            f=shaped(f),
            fprime=shaped(fprime),
            fsecond=None if fsecond is None else shaped(fsecond),
        )


def _join(parts: list[IsotropicValues], shape: tuple[int, ...]) -> IsotropicValues:
    def stacked(rows: list[NDArray[np.complex128]]) -> NDArray[np.complex128]:
        return np.concatenate(rows, axis=0).reshape((*shape, 3))

    seconds = [part.fsecond for part in parts if part.fsecond is not None]
    return IsotropicValues(
        f=stacked([part.f for part in parts]),
        fprime=stacked([part.fprime for part in parts]),
        fsecond=stacked(seconds) if len(seconds) == len(parts) else None,
    )
