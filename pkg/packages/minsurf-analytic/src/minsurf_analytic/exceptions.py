"""Errors raised while parsing or evaluating analytic expressions."""

from __future__ import annotations


class AnalyticError(Exception):
    """Base exception for the expression engine.

    Parameters
    ----------
    message:
        Human-readable description of the failure.
    **context:
        Structured context such as ``offset`` or ``value``.

    """

    def __init__(self, message: str | None = None, **context: object) -> None:
        self.message = message or "Analytic expression error."
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


class ExpressionSyntaxError(AnalyticError):
    """Raised when the source text does not follow the expression grammar."""

    def __init__(self, detail: str, offset: int) -> None:
        self.offset = offset
        super().__init__(f"{detail} at offset {offset}", offset=offset)


class UnknownIdentifierError(ExpressionSyntaxError):
    """Raised for names other than ``t``, ``pi``, ``e`` and the built-in functions."""

    def __init__(self, name: str, offset: int) -> None:
        self.name = name
        super().__init__(f"Unknown identifier '{name}'", offset)


class InvalidExponentError(ExpressionSyntaxError):
    """Raised when ``^`` is not followed by a non-negative integer literal."""

    def __init__(self, offset: int) -> None:
        super().__init__("Exponent must be a non-negative integer literal", offset)


class AnalyticDivisionError(AnalyticError):
    """Raised when a quotient denominator vanishes at an evaluation point."""

    def __init__(self, value: complex) -> None:
        self.value = value
        super().__init__(f"Division by zero (denominator {value!r})", value=value)


class BranchPointError(AnalyticError):
    """Raised when a square root is continued too close to its branch point."""

    def __init__(self, value: complex, epsilon: float) -> None:
        self.value = value
        super().__init__(
            f"sqrt radicand {value!r} is within {epsilon:g} of the branch point",
            value=value,
            epsilon=epsilon,
        )


class BranchTrackingRequiredError(AnalyticError):
    """Raised when an expression containing ``sqrt`` is evaluated without a tracker."""

    def __init__(self) -> None:
        super().__init__("Expression contains sqrt; supply a BranchTracker to evaluate it")
