"""Exception hierarchy for strips, quadrature and patch evaluation."""

from __future__ import annotations


class BjorlingError(Exception):
    """Base exception for Björling data and surface evaluation.

    Parameters
    ----------
    message:
        Human-readable description of the failure.
    **context:
        Structured context for logs and error reports.

    """

    def __init__(self, message: str | None = None, **context: object) -> None:
        self.message = message or "Björling evaluation error."
        self.context = dict(context)
        super().__init__(self.message)

    def __str__(self) -> str:
        """Return the human-readable message."""
        return self.message

    def __repr__(self) -> str:
        """Return a representation including structured context."""
        context_parts = ", ".join(f"{key}={value!r}" for key, value in self.context.items())
        if context_parts:
            return f"{self.__class__.__name__}(message={self.message!r}, {context_parts})"
        return f"{self.__class__.__name__}(message={self.message!r})"


class StripError(BjorlingError):
    """Raised when curve or normal data cannot form a strip."""


class NonPlanarCurveError(StripError):
    """Raised when a planar construction receives a curve with non-zero z."""

    def __init__(self, residual: float) -> None:
        self.residual = residual
        super().__init__(
            f"Curve is not contained in the XY-plane (max |z| = {residual:.3e})",
            residual=residual,
        )


class DegenerateFrameError(StripError):
    """Raised when the in-plane normal cannot be oriented at t = 0."""

    def __init__(self, phi: float) -> None:
        self.phi = phi
        super().__init__(
            f"c''(0) has no normal component; orientation is undefined for phi = {phi:g}",
            phi=phi,
        )


class NotPerpendicularSymmetricError(StripError):
    """Raised when a curve fails the parity test about the X-axis."""

    def __init__(self, residual: float, tol: float) -> None:
        self.residual = residual
        super().__init__(
            f"Curve is not perpendicular symmetric (residual {residual:.3e} > {tol:g})",
            residual=residual,
            tol=tol,
        )


class DomainGridError(BjorlingError):
    """Raised when grid bounds or resolution are invalid."""


class QuadratureError(BjorlingError):
    """Raised when adaptive quadrature does not converge."""

    def __init__(self, levels: int, error: float) -> None:
        self.levels = levels
        self.error = error
        super().__init__(
            f"Quadrature did not converge after {levels} refinement levels "
            f"(estimated error {error:.3e})",
            levels=levels,
            error=error,
        )
