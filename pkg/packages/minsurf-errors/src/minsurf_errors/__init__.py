"""Shared error contracts and formatting helpers."""

from minsurf_errors.errors import (
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_NUMERICAL_FAILURE,
    EXIT_OK,
    ErrorResult,
    format_error_for_cli,
    log_fields_for_error,
)

__all__ = [
    "EXIT_CHECK_FAILED",
    "EXIT_INPUT_ERROR",
    "EXIT_NUMERICAL_FAILURE",
    "EXIT_OK",
    "ErrorResult",
    "format_error_for_cli",
    "log_fields_for_error",
]
