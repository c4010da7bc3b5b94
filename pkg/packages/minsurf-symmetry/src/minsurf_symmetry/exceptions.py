"""Exception hierarchy for symmetry tests, registration and search."""

from __future__ import annotations


class SymmetryError(Exception):
    """Base exception for symmetry analysis.

    Parameters
    ----------
    message:
        Human-readable description of the failure.
    **context:
        Structured context for logs and error reports.

    """

    def __init__(self, message: str | None = None, **context: object) -> None:
        self.message = message or "Symmetry analysis error."
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


class GridSymmetryError(SymmetryError):
    """Raised when a grid does not cover the axes or reflections a test needs."""


class DomainOverlapError(SymmetryError):
    """Raised when too few nodes of one patch lie inside the domain of another."""

    def __init__(self, shared: int, required: int) -> None:
        self.shared = shared
        super().__init__(
            f"Patch domains share {shared} nodes; congruence needs at least {required}",
            shared=shared,
            required=required,
        )


class DegeneratePointSetError(SymmetryError):
    """Raised when a registration point set spans fewer than two dimensions."""

    def __init__(self, rank: int) -> None:
        self.rank = rank
        super().__init__(
            f"Point set is degenerate (covariance rank {rank}); cannot fit an orthogonal map",
            rank=rank,
        )


class CpgPlanarityError(SymmetryError):
    """Raised when ``X(it)`` leaves the XZ-plane."""

    def __init__(self, residual: float, tol: float) -> None:
        self.residual = residual
        super().__init__(
            f"Imaginary-axis curve is not in the XZ-plane (max |y| = {residual:.3e} > {tol:g})",
            residual=residual,
            tol=tol,
        )


class SearchError(SymmetryError):
    """Raised when a search never produces a finite objective value."""
