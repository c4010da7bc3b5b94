# ruff: noqa: D102
"""Unit tests for the error dispatcher module."""

from __future__ import annotations

from pathlib import Path

import pytest
import typer
from minsurf_analytic import BranchPointError, ExpressionSyntaxError
from minsurf_bjorling import NonPlanarCurveError, QuadratureError
from minsurf_catalog import CatalogParameterError, UnknownCatalogEntryError
from minsurf_cli.error_dispatcher import ErrorDispatcher
from minsurf_cli.exceptions import InputSelectionError, SpecFileError
from minsurf_errors import ErrorResult
from minsurf_export import ExportIOError
from minsurf_settings import ConfigFileError
from minsurf_symmetry import (
    CpgPlanarityError,
    DegeneratePointSetError,
    DomainOverlapError,
    SearchError,
)
from pydantic import BaseModel, ValidationError


@pytest.fixture
def dispatcher() -> ErrorDispatcher:
    """Create an ErrorDispatcher instance for testing."""
    return ErrorDispatcher()


class TestErrorDispatcher:
    """Test suite for ErrorDispatcher class."""

    def test_dispatch_typer_exit_propagates(self, dispatcher: ErrorDispatcher) -> None:
        exc = typer.Exit(code=42)
        with pytest.raises(typer.Exit) as exc_info:
            dispatcher.dispatch(exc, verbose=False)
        assert exc_info.value.exit_code == 42

    def test_spec_file_error(self, dispatcher: ErrorDispatcher) -> None:
        exc = SpecFileError("spec.toml: domain: Field required", "spec.toml")

        result = dispatcher.dispatch(exc, verbose=False)

        assert isinstance(result, ErrorResult)
        assert result.exit_code == 2
        assert "domain" in result.message
        assert result.suggestion is not None
        assert "[curve]" in result.suggestion
        assert result.traceback is None

    def test_input_selection_error(self, dispatcher: ErrorDispatcher) -> None:
        result = dispatcher.dispatch(InputSelectionError("give either"), verbose=False)
        assert result.exit_code == 2
        assert result.message == "give either"

    def test_unknown_catalog_entry(self, dispatcher: ErrorDispatcher) -> None:
        exc = UnknownCatalogEntryError("nonsense", ["circle", "enneper_cubic"])

        result = dispatcher.dispatch(exc, verbose=False)

        assert result.exit_code == 2
        assert "unknown catalog entry 'nonsense'" in result.message
        assert result.suggestion == "Run 'minsurf catalog' to list the available entries."

    def test_catalog_parameter_error(self, dispatcher: ErrorDispatcher) -> None:
        exc = CatalogParameterError("weak_cpg: k must be an integer >= 1, got 0.5")
        result = dispatcher.dispatch(exc, verbose=False)
        assert result.exit_code == 2
        assert "k must be an integer" in result.message

    def test_expression_syntax_error(self, dispatcher: ErrorDispatcher) -> None:
        result = dispatcher.dispatch(ExpressionSyntaxError("unexpected ')'", 3), verbose=False)
        assert result.exit_code == 2
        assert result.message.startswith("Invalid expression:")
        assert "offset 3" in result.message

    def test_branch_point_is_numerical(self, dispatcher: ErrorDispatcher) -> None:
        result = dispatcher.dispatch(BranchPointError(0j, 1e-12), verbose=False)
        assert result.exit_code == 3
        assert result.message.startswith("Numerical failure:")

    def test_quadrature_error(self, dispatcher: ErrorDispatcher) -> None:
        result = dispatcher.dispatch(QuadratureError(16, 1e-3), verbose=False)
        assert result.exit_code == 3
        assert "Quadrature failed" in result.message
        assert result.suggestion is not None
        assert "--quad-tol" in result.suggestion

    def test_strip_error(self, dispatcher: ErrorDispatcher) -> None:
        result = dispatcher.dispatch(NonPlanarCurveError(0.5), verbose=False)
        assert result.exit_code == 2
        assert result.message.startswith("Invalid strip:")

    def test_cpg_planarity_is_input_error(self, dispatcher: ErrorDispatcher) -> None:
        result = dispatcher.dispatch(CpgPlanarityError(0.1, 1e-8), verbose=False)
        assert result.exit_code == 2
        assert result.suggestion is not None
        assert "phi = pi/2" in result.suggestion

    @pytest.mark.parametrize(
        "exc",
        [DegeneratePointSetError(1), SearchError("no finite residual")],
    )
    def test_symmetry_failures_are_numerical(
        self, dispatcher: ErrorDispatcher, exc: Exception
    ) -> None:
        assert dispatcher.dispatch(exc, verbose=False).exit_code == 3

    def test_export_error(self, dispatcher: ErrorDispatcher) -> None:
        exc = ExportIOError("Cannot write out.obj", cause=PermissionError("denied"))

        result = dispatcher.dispatch(exc, verbose=False)

        assert result.exit_code == 3
        assert result.message == "Export failed: Cannot write out.obj"

    def test_pydantic_validation_error(self, dispatcher: ErrorDispatcher) -> None:
        class Model(BaseModel):
            nu: int

        with pytest.raises(ValidationError) as exc_info:
            Model.model_validate({"nu": "many"})

        result = dispatcher.dispatch(exc_info.value, verbose=False)

        assert result.exit_code == 2
        assert "for field 'nu'" in result.message

    def test_unexpected_error(self, dispatcher: ErrorDispatcher) -> None:
        result = dispatcher.dispatch(RuntimeError("boom"), verbose=False)
        assert result.exit_code == 2
        assert result.message == "An unexpected error occurred."
        assert result.traceback is None

    def test_verbose_includes_traceback(self, dispatcher: ErrorDispatcher) -> None:
        try:
            raise SearchError("no finite residual")
        except SearchError as exc:
            result = dispatcher.dispatch(exc, verbose=True)
        assert result.traceback is not None
        assert "SearchError" in result.traceback

    def test_domain_overlap_is_an_input_error(self, dispatcher: ErrorDispatcher) -> None:
        result = dispatcher.dispatch(DomainOverlapError(0, 3), verbose=False)
        assert result.exit_code == 2
        assert "share 0 nodes" in result.message
        assert result.context == {"shared": 0, "required": 3}

    def test_config_file_error(self, dispatcher: ErrorDispatcher) -> None:
        exc = ConfigFileError(Path("run.toml"), "file does not exist")
        result = dispatcher.dispatch(exc, verbose=False)
        assert result.exit_code == 2
        assert "run.toml" in result.message
        assert result.suggestion is not None
        assert "--config" in result.suggestion

    def test_context_travels_with_the_result(self, dispatcher: ErrorDispatcher) -> None:
        result = dispatcher.dispatch(ExpressionSyntaxError("unexpected ')'", 3), verbose=True)
        assert result.context == {"offset": 3}

    def test_custom_handler_registration(self, dispatcher: ErrorDispatcher) -> None:
        class CustomError(Exception):
            pass

        def handle(exc: CustomError, *, verbose: bool) -> ErrorResult:
            del verbose
            return ErrorResult(message=f"custom: {exc}", suggestion=None, exit_code=3)

        dispatcher.register(CustomError, handle)

        result = dispatcher.dispatch(CustomError("x"), verbose=False)

        assert result.exit_code == 3
        assert result.message == "custom: x"
