"""Exit codes and the error record shared by the minsurf command line."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Mapping

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_NUMERICAL_FAILURE = 3

ERROR_EXIT_CODES = frozenset({EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_NUMERICAL_FAILURE})


def _render(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, complex):
        return f"{value.real:.6g}{value.imag:+.6g}j"
    return str(value)


@dataclass(frozen=True)
class ErrorResult:
    """A failed run: message, hint, exit code and the failure's structured context.

    ``context`` carries what the numerical packages attach to their
    exceptions, such as the byte ``offset`` of a syntax error, the radicand
    ``value`` near a branch point or the ``rank`` of a degenerate point set.
    """

    message: str
    suggestion: str | None
    exit_code: int
    traceback: str | None = None
    context: Mapping[str, object] = field(default_factory=dict[str, object])

    def __post_init__(self) -> None:
        """Validate individual fields."""
        if self.exit_code not in ERROR_EXIT_CODES:
            msg = f"exit_code must be one of {sorted(ERROR_EXIT_CODES)}, got {self.exit_code}"
            raise ValueError(msg)
        if not self.message.strip():
            msg = "message must not be empty"
            raise ValueError(msg)


def format_error_for_cli(result: ErrorResult) -> str:
    """Render message, suggestion, context (only with a traceback) and traceback."""
    parts = [f"Error: {result.message}"]
    if result.suggestion:
        parts.append(f"Suggestion: {result.suggestion}")
    if result.traceback:
        if result.context:
            rendered = ", ".join(
                f"{key}={_render(value)}" for key, value in result.context.items()
            )
            parts.append(f"Context: {rendered}")
        parts.append("")
        parts.append(result.traceback)
    return "\n".join(parts)


def log_fields_for_error(result: ErrorResult) -> dict[str, object]:
    """Return structured fields suitable for logging."""
    fields: dict[str, object] = {
        "level": "error",
        "message": result.message,
        "exit_code": result.exit_code,
    }
    if result.suggestion:
        fields["suggestion"] = result.suggestion
    if result.context:
        fields["context"] = {key: _render(value) for key, value in result.context.items()}
    if result.traceback:
        fields["traceback"] = result.traceback
    return fields
