"""Tests for ErrorResult helpers."""

from __future__ import annotations

import pytest
from minsurf_errors import (
    EXIT_INPUT_ERROR,
    EXIT_NUMERICAL_FAILURE,
    ErrorResult,
    format_error_for_cli,
    log_fields_for_error,
)


@pytest.mark.parametrize("code", [0, 4, -1])
def test_error_result_rejects_undocumented_exit_codes(code: int) -> None:
    """ErrorResult only carries the failure exit codes 1, 2 and 3."""
    with pytest.raises(ValueError, match="exit_code must be one of"):
        ErrorResult(message="bad", suggestion=None, exit_code=code)


def test_error_result_rejects_blank_message() -> None:
    """ErrorResult requires a message."""
    with pytest.raises(ValueError, match="message must not be empty"):
        ErrorResult(message="  ", suggestion=None, exit_code=EXIT_INPUT_ERROR)


def test_cli_formatter_includes_suggestion_and_traceback() -> None:
    """The CLI rendering lists message, suggestion and traceback in order."""
    result = ErrorResult(
        message="Quadrature did not converge",
        suggestion="Shrink the domain",
        exit_code=EXIT_NUMERICAL_FAILURE,
        traceback="Traceback...",
    )
    assert format_error_for_cli(result).splitlines() == [
        "Error: Quadrature did not converge",
        "Suggestion: Shrink the domain",
        "",
        "Traceback...",
    ]


def test_log_fields_skip_missing_parts() -> None:
    """Only populated fields are emitted for logging."""
    result = ErrorResult(message="unknown catalog entry", suggestion=None, exit_code=2)
    assert log_fields_for_error(result) == {
        "level": "error",
        "message": "unknown catalog entry",
        "exit_code": 2,
    }


def test_context_is_shown_with_the_traceback() -> None:
    """Structured context is rendered only in verbose output."""
    context = {"value": 1e-13 + 2e-14j, "epsilon": 1e-12}
    quiet = ErrorResult(
        message="sqrt radicand near branch point",
        suggestion=None,
        exit_code=EXIT_NUMERICAL_FAILURE,
        context=context,
    )
    assert "Context" not in format_error_for_cli(quiet)

    verbose = ErrorResult(
        message="sqrt radicand near branch point",
        suggestion=None,
        exit_code=EXIT_NUMERICAL_FAILURE,
        traceback="Traceback...",
        context=context,
    )
    assert format_error_for_cli(verbose).splitlines()[1] == (
        "Context: value=1e-13+2e-14j, epsilon=1e-12"
    )


def test_log_fields_render_context() -> None:
    """Context values are rendered compactly for structured logs."""
    result = ErrorResult(
        message="degenerate point set",
        suggestion=None,
        exit_code=EXIT_NUMERICAL_FAILURE,
        context={"rank": 1, "residual": 0.000123456789},
    )
    assert log_fields_for_error(result)["context"] == {"rank": "1", "residual": "0.000123457"}
