"""Centralized error dispatcher for CLI error handling."""

from __future__ import annotations

import traceback
from typing import Protocol, TypeVar, cast

import typer
from minsurf_analytic import (
    AnalyticDivisionError,
    AnalyticError,
    BranchPointError,
    ExpressionSyntaxError,
)
from minsurf_bjorling import BjorlingError, DomainGridError, QuadratureError, StripError
from minsurf_catalog import CatalogError, UnknownCatalogEntryError
from minsurf_errors import EXIT_INPUT_ERROR, EXIT_NUMERICAL_FAILURE, ErrorResult
from minsurf_export import ExportError
from minsurf_settings import ConfigFileError
from minsurf_symmetry import (
    CpgPlanarityError,
    DegeneratePointSetError,
    DomainOverlapError,
    GridSymmetryError,
    SearchError,
    SymmetryError,
)
from pydantic import ValidationError as PydanticValidationError

from minsurf_cli.exceptions import CliInputError, SpecFileError

ExcT_contra = TypeVar("ExcT_contra", bound=Exception, contravariant=True)


class ErrorHandler(Protocol[ExcT_contra]):
    """Protocol for exception handler functions."""

    def __call__(self, exc: ExcT_contra, *, verbose: bool) -> ErrorResult:
        """Return structured error information for the provided exception."""
        ...


HandlerEntry = tuple[type[Exception], ErrorHandler[Exception]]


class ErrorDispatcher:
    """Registry-based error dispatcher mapping exceptions to exit codes.

    Input problems exit with 2, numerical failures and unwritable output with 3.
    """

    def __init__(self) -> None:
        self._registry: list[HandlerEntry] = []
        self._fallback: HandlerEntry = (Exception, self._handle_unexpected_error)
        self._register_default_handlers()

    def register(
        self,
        exc_type: type[ExcT_contra],
        handler: ErrorHandler[ExcT_contra],
    ) -> None:
        """Register a handler for a specific exception type."""
        entry: HandlerEntry = (exc_type, cast("ErrorHandler[Exception]", handler))
        self._registry.append(entry)

    def dispatch(self, exc: Exception, *, verbose: bool) -> ErrorResult:
        """Route exception to the first matching handler and return structured result."""
        if isinstance(exc, typer.Exit):
            raise exc

        handler = self._resolve_handler(exc)
        return handler(exc, verbose=verbose)

    # ========== Registry Helpers ==========

    def _register_default_handlers(self) -> None:
        """Register built-in handlers in priority order (specific → general)."""
        self.register(SpecFileError, self._handle_spec_file_error)
        self.register(CliInputError, self._handle_input_error)
        self.register(UnknownCatalogEntryError, self._handle_unknown_entry)
        self.register(CatalogError, self._handle_input_error)

        self.register(ExpressionSyntaxError, self._handle_expression_syntax)
        self.register(BranchPointError, self._handle_numerical_failure)
        self.register(AnalyticDivisionError, self._handle_numerical_failure)
        self.register(AnalyticError, self._handle_input_error)

        self.register(QuadratureError, self._handle_quadrature_error)
        self.register(StripError, self._handle_strip_error)
        self.register(DomainGridError, self._handle_input_error)
        self.register(BjorlingError, self._handle_numerical_failure)

        self.register(DomainOverlapError, self._handle_input_error)
        self.register(DegeneratePointSetError, self._handle_numerical_failure)
        self.register(SearchError, self._handle_numerical_failure)
        self.register(CpgPlanarityError, self._handle_symmetry_input)
        self.register(GridSymmetryError, self._handle_symmetry_input)
        self.register(SymmetryError, self._handle_numerical_failure)

        self.register(ConfigFileError, self._handle_config_file_error)
        self.register(ExportError, self._handle_export_error)
        self.register(PydanticValidationError, self._handle_pydantic_validation_error)

    def _resolve_handler(self, exc: Exception) -> ErrorHandler[Exception]:
        """Return the first registered handler that matches the exception."""
        for exc_type, handler in self._registry:
            if isinstance(exc, exc_type):
                return handler
        _, handler = self._fallback
        return handler

    # ========== Input Error Handlers ==========

    def _handle_spec_file_error(self, exc: SpecFileError, *, verbose: bool) -> ErrorResult:
        return self._format_error(
            str(exc),
            suggestion="Check the spec file: [curve] and [domain] are required.",
            verbose=verbose,
            exc=exc,
        )

    def _handle_unknown_entry(
        self, exc: UnknownCatalogEntryError, *, verbose: bool
    ) -> ErrorResult:
        return self._format_error(
            str(exc),
            suggestion="Run 'minsurf catalog' to list the available entries.",
            verbose=verbose,
            exc=exc,
        )

    def _handle_expression_syntax(
        self, exc: ExpressionSyntaxError, *, verbose: bool
    ) -> ErrorResult:
        return self._format_error(
            f"Invalid expression: {exc}",
            suggestion="Expressions use t, numbers, + - * / ^ and sin, cos, exp, sqrt, ...",
            verbose=verbose,
            exc=exc,
        )

    def _handle_strip_error(self, exc: StripError, *, verbose: bool) -> ErrorResult:
        return self._format_error(
            f"Invalid strip: {exc}",
            suggestion="Planar strips need z = 0; give an explicit [normal] otherwise.",
            verbose=verbose,
            exc=exc,
        )

    def _handle_symmetry_input(self, exc: SymmetryError, *, verbose: bool) -> ErrorResult:
        return self._format_error(
            str(exc),
            suggestion="CPG checks need a planar strip with phi = pi/2 on a grid around 0.",
            verbose=verbose,
            exc=exc,
        )

    def _handle_config_file_error(self, exc: ConfigFileError, *, verbose: bool) -> ErrorResult:
        return self._format_error(
            str(exc),
            suggestion="Pass an existing TOML file to --config or unset MINSURF_CONFIG.",
            verbose=verbose,
            exc=exc,
        )

    def _handle_input_error(self, exc: Exception, *, verbose: bool) -> ErrorResult:
        return self._format_error(str(exc) or "Invalid input.", verbose=verbose, exc=exc)

    # ========== Numerical Failure Handlers ==========

    def _handle_quadrature_error(self, exc: QuadratureError, *, verbose: bool) -> ErrorResult:
        return self._format_error(
            f"Quadrature failed: {exc}",
            suggestion="Shrink the domain away from branch points or loosen --quad-tol.",
            verbose=verbose,
            exc=exc,
            exit_code=EXIT_NUMERICAL_FAILURE,
        )

    def _handle_numerical_failure(self, exc: Exception, *, verbose: bool) -> ErrorResult:
        return self._format_error(
            f"Numerical failure: {exc}",
            suggestion="Check the domain for branch points or singular nodes.",
            verbose=verbose,
            exc=exc,
            exit_code=EXIT_NUMERICAL_FAILURE,
        )

    # ========== Output Error Handler ==========

    def _handle_export_error(self, exc: ExportError, *, verbose: bool) -> ErrorResult:
        return self._format_error(
            f"Export failed: {exc}",
            suggestion="Check file permissions and disk space.",
            verbose=verbose,
            exc=exc,
            exit_code=EXIT_NUMERICAL_FAILURE,
        )

    # ========== Validation Error Handler ==========

    def _handle_pydantic_validation_error(
        self,
        exc: PydanticValidationError,
        *,
        verbose: bool,
    ) -> ErrorResult:
        errors = exc.errors()
        if errors:
            first_error = errors[0]
            field = ".".join(str(part) for part in first_error.get("loc", ("unknown",)))
            message = first_error.get("msg", "Validation failed").capitalize()
            rendered = f"{message} for field '{field}'."
        else:
            rendered = "Validation failed."
        return self._format_error(
            rendered,
            suggestion="Check your input values and try again.",
            verbose=verbose,
            exc=exc,
        )

    # ========== Fallback Handler ==========

    def _handle_unexpected_error(self, exc: Exception, *, verbose: bool) -> ErrorResult:
        return self._format_error(
            "An unexpected error occurred.",
            suggestion="Run with --verbose for details or file a bug report.",
            verbose=verbose,
            exc=exc,
        )

    # ========== Helper Methods ==========

    def _format_error(
        self,
        message: str,
        *,
        suggestion: str | None = None,
        verbose: bool,
        exc: Exception | None = None,
        exit_code: int = EXIT_INPUT_ERROR,
    ) -> ErrorResult:
        """Build structured error result with optional traceback."""
        tb = None
        if verbose and exc is not None:
            tb = "".join(traceback.format_exception(type(exc), exc, exc.__traceback__)).rstrip()
        context = getattr(exc, "context", None)
        return ErrorResult(
            message=message,
            suggestion=suggestion,
            exit_code=exit_code,
            traceback=tb,
            context=cast("dict[str, object]", context) if isinstance(context, dict) else {},
        )
