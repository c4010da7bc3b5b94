"""End-to-end tests for minsurf commands through the Typer app."""

from __future__ import annotations

import json
from collections.abc import Callable
from pathlib import Path

import pytest
from minsurf_cli import app
from typer.testing import CliRunner

SMALL = ["--grid", "11x11"]


def _report(path: Path) -> dict[str, object]:
    return json.loads(path.read_text(encoding="utf-8"))


def _check_names(report: dict[str, object]) -> list[str]:
    checks = report["checks"]
    assert isinstance(checks, list)
    return [check["name"] for check in checks]  # type: ignore[index]


@pytest.mark.usefixtures("isolated_home")
class TestInputSelection:
    """Choosing between spec files and catalog entries."""

    def test_no_arguments_shows_help(self, runner: CliRunner) -> None:
        result = runner.invoke(app, [])
        assert "transform" in result.output

    def test_unknown_catalog_entry(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["verify", "--catalog", "nonsense"])
        assert result.exit_code == 2
        assert "unknown catalog entry" in result.output
        assert "minsurf catalog" in result.output

    def test_neither_input(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["verify"])
        assert result.exit_code == 2
        assert "give either a spec file or --catalog NAME" in result.output

    def test_both_inputs(self, runner: CliRunner, enneper_spec: Path) -> None:
        result = runner.invoke(app, ["verify", str(enneper_spec), "--catalog", "circle"])
        assert result.exit_code == 2

    def test_param_without_catalog(self, runner: CliRunner, enneper_spec: Path) -> None:
        result = runner.invoke(app, ["verify", str(enneper_spec), "--param", "k=2"])
        assert result.exit_code == 2
        assert "--param only applies" in result.output

    def test_invalid_grid(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["verify", "-c", "enneper_cubic", "--grid", "1x9"])
        assert result.exit_code == 2
        assert "Invalid grid" in result.output

    def test_invalid_domain(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["verify", "-c", "enneper_cubic", "--domain", "1:0,0:1"])
        assert result.exit_code == 2
        assert "Invalid domain" in result.output

    def test_bad_catalog_parameter(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["verify", "-c", "weak_cpg", "-p", "k=0.5"])
        assert result.exit_code == 2
        assert "k must be an integer" in result.output

    def test_missing_spec_file(self, runner: CliRunner, isolated_home: Path) -> None:
        result = runner.invoke(app, ["verify", str(isolated_home / "absent.toml")])
        assert result.exit_code == 2
        assert "Cannot read spec file" in result.output

    def test_bad_expression(
        self, runner: CliRunner, write_spec: Callable[[str, str], Path]
    ) -> None:
        path = write_spec(
            '[curve]\nx = "t^^2"\ny = "t"\n\n[domain]\nu = [-1, 1]\nv = [-1, 1]\n', "bad.toml"
        )
        result = runner.invoke(app, ["verify", str(path)])
        assert result.exit_code == 2
        assert "Invalid expression" in result.output

    def test_non_planar_curve_without_normal(
        self, runner: CliRunner, write_spec: Callable[[str, str], Path]
    ) -> None:
        path = write_spec(
            '[curve]\nx = "t"\ny = "0"\nz = "t"\n\n[domain]\nu = [-1, 1]\nv = [-1, 1]\n',
            "tilted.toml",
        )
        result = runner.invoke(app, ["verify", str(path)])
        assert result.exit_code == 2
        assert "Invalid strip" in result.output


@pytest.mark.usefixtures("isolated_home")
class TestTransform:
    """Surface evaluation, mesh export and minimality checks."""

    def test_enneper_obj(self, runner: CliRunner, isolated_home: Path) -> None:
        mesh = isolated_home / "enneper.obj"
        report = isolated_home / "report.json"

        result = runner.invoke(
            app,
            ["transform", "-c", "enneper_cubic", *SMALL, "--out", str(mesh), "-r", str(report)],
        )

        assert result.exit_code == 0, result.output
        assert "Wrote OBJ mesh" in result.output
        lines = mesh.read_text(encoding="utf-8").splitlines()
        assert sum(line.startswith("v ") for line in lines) == 121
        assert sum(line.startswith("f ") for line in lines) == 200
        document = _report(report)
        assert document["command"] == "transform"
        assert _check_names(document) == [
            "strip_validation",
            "isotropy",
            "conformality",
            "boundary_curve",
            "boundary_normal",
            "laplacian_convergence",
        ]
        assert document["timings"] is None
        results = document["results"]
        assert isinstance(results, dict)
        assert results["mesh"]["vertices"] == 121  # type: ignore[index]

    def test_ply_from_spec_file(
        self, runner: CliRunner, enneper_spec: Path, isolated_home: Path
    ) -> None:
        mesh = isolated_home / "enneper.ply"
        result = runner.invoke(
            app, ["transform", str(enneper_spec), "--out", str(mesh), "--format", "ply"]
        )
        assert result.exit_code == 0, result.output
        assert mesh.read_bytes().startswith(b"ply\n")

    def test_without_output_writes_no_mesh(
        self, runner: CliRunner, enneper_spec: Path, isolated_home: Path
    ) -> None:
        result = runner.invoke(app, ["transform", str(enneper_spec)])
        assert result.exit_code == 0, result.output
        assert "Wrote" not in result.output
        assert list(isolated_home.glob("*.obj")) == []

    def test_unknown_format(self, runner: CliRunner, enneper_spec: Path) -> None:
        result = runner.invoke(
            app, ["transform", str(enneper_spec), "--out", "x.stl", "--format", "stl"]
        )
        assert result.exit_code == 3
        assert "Export failed" in result.output

    def test_reports_are_reproducible(
        self, runner: CliRunner, enneper_spec: Path, isolated_home: Path
    ) -> None:
        first = isolated_home / "first.json"
        second = isolated_home / "second.json"
        runner.invoke(app, ["transform", str(enneper_spec), "-r", str(first)])
        runner.invoke(app, ["transform", str(enneper_spec), "-r", str(second)])
        assert first.read_bytes() == second.read_bytes()
        assert str(_report(first)["input_digest"]).startswith("sha256:")

    def test_timings_flag(
        self, runner: CliRunner, enneper_spec: Path, isolated_home: Path
    ) -> None:
        report = isolated_home / "timed.json"
        result = runner.invoke(
            app, ["--timings", "transform", str(enneper_spec), "-r", str(report)]
        )
        assert result.exit_code == 0, result.output
        timings = _report(report)["timings"]
        assert isinstance(timings, dict)
        assert "evaluate" in timings

    def test_overrides_change_the_digest(
        self, runner: CliRunner, enneper_spec: Path, isolated_home: Path
    ) -> None:
        plain = isolated_home / "plain.json"
        tight = isolated_home / "tight.json"
        runner.invoke(app, ["verify", str(enneper_spec), "-r", str(plain)])
        runner.invoke(app, ["verify", str(enneper_spec), "--tol", "1e-9", "-r", str(tight)])
        assert _report(plain)["input_digest"] != _report(tight)["input_digest"]


@pytest.mark.usefixtures("isolated_home")
class TestVerify:
    """Check selection through the [checks] section."""

    def test_selected_suites(
        self, runner: CliRunner, write_spec: Callable[[str, str], Path], isolated_home: Path
    ) -> None:
        path = write_spec(
            '[curve]\nx = "t^2"\ny = "t^3/3 - t"\n\n[domain]\nu = [-1, 1]\nv = [-1, 1]\n'
            "nu = 11\nnv = 11\n\n"
            '[checks]\nnames = ["self_cpg", "strip"]\n\n'
            '[output]\nreport = "verify.json"\n',
            "checks.toml",
        )
        result = runner.invoke(app, ["verify", str(path)])
        assert result.exit_code == 0, result.output
        document = _report(isolated_home / "verify.json")
        assert _check_names(document) == ["self_cpg", "strip_validation"]

    def test_planar_checks_are_inapplicable_for_explicit_strips(
        self, runner: CliRunner, isolated_home: Path
    ) -> None:
        report = isolated_home / "helicoid.json"
        result = runner.invoke(
            app, ["cpg", "-c", "line_rotating_normal", *SMALL, "-r", str(report)]
        )
        assert result.exit_code == 0, result.output
        assert "not applicable" in result.output
        checks = _report(report)["checks"]
        assert isinstance(checks, list)
        assert all(check["applicable"] is False for check in checks)  # type: ignore[index]


@pytest.mark.usefixtures("isolated_home")
class TestCpgAndAdjoint:
    """CPG extraction and adjoint surfaces."""

    def test_enneper_is_self_cpg(self, runner: CliRunner, isolated_home: Path) -> None:
        report = isolated_home / "cpg.json"
        result = runner.invoke(app, ["cpg", "-c", "enneper_cubic", *SMALL, "-r", str(report)])
        assert result.exit_code == 0, result.output
        assert "CPG vertex" in result.output
        document = _report(report)
        assert _check_names(document) == ["self_cpg", "diagonal_lines"]
        results = document["results"]
        assert isinstance(results, dict)
        assert "points" in results["cpg"]

    def test_circle_is_not_self_cpg(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["cpg", "-c", "circle", "--grid", "21x21"])
        assert result.exit_code == 1
        assert "✗ self_cpg" in result.output

    def test_enneper_adjoint(self, runner: CliRunner, isolated_home: Path) -> None:
        mesh = isolated_home / "adjoint.obj"
        result = runner.invoke(app, ["adjoint", "-c", "enneper_cubic", *SMALL, "-o", str(mesh)])
        assert result.exit_code == 0, result.output
        assert "straight_arc" in result.output
        assert mesh.exists()


@pytest.mark.usefixtures("isolated_home")
class TestSymmetry:
    """Reflections, D4/D8 and dihedral order."""

    def test_enneper(self, runner: CliRunner, isolated_home: Path) -> None:
        report = isolated_home / "symmetry.json"
        result = runner.invoke(
            app, ["symmetry", "-c", "enneper_cubic", "--grid", "21x21", "-r", str(report)]
        )
        assert result.exit_code == 0, result.output
        listed = _report(report)["checks"]
        assert isinstance(listed, list)
        checks = {check["name"]: check for check in listed}  # type: ignore[index]
        assert checks["rho_literal"]["advisory"] is True
        assert checks["rho_fitted"]["pass"] is True
        assert checks["self_adjoint"]["pass"] is True


@pytest.mark.usefixtures("isolated_home")
class TestRelate:
    """Sampled congruence of two inputs."""

    def test_same_entry_is_congruent(self, runner: CliRunner) -> None:
        result = runner.invoke(
            app, ["relate", "-c", "enneper_cubic", "-c", "enneper_cubic", *SMALL]
        )
        assert result.exit_code == 0, result.output
        assert "✓ sampled_congruence" in result.output

    def test_spec_file_against_catalog(self, runner: CliRunner, enneper_spec: Path) -> None:
        result = runner.invoke(app, ["relate", str(enneper_spec), "-c", "enneper_cubic", *SMALL])
        assert result.exit_code == 0, result.output

    def test_different_surfaces(self, runner: CliRunner) -> None:
        result = runner.invoke(
            app,
            ["relate", "-c", "enneper_cubic", "-c", "parabola", *SMALL],
        )
        assert result.exit_code == 1
        assert "✗ sampled_congruence" in result.output

    def test_inputs_on_different_grids(
        self, runner: CliRunner, enneper_spec: Path, write_spec: Callable[[str, str], Path]
    ) -> None:
        other = write_spec(
            '[curve]\nx = "t^2"\ny = "t^3/3 - t"\n\n'
            "[domain]\nu = [-0.5, 1.0]\nv = [-1.0, 0.6]\nnu = 9\nnv = 7\n",
            "shifted.toml",
        )
        result = runner.invoke(app, ["relate", str(enneper_spec), str(other)])
        assert result.exit_code == 0, result.output
        assert "✓ sampled_congruence" in result.output

    def test_disjoint_domains_are_an_input_error(
        self, runner: CliRunner, enneper_spec: Path, write_spec: Callable[[str, str], Path]
    ) -> None:
        far = write_spec(
            '[curve]\nx = "t^2"\ny = "t^3/3 - t"\n\n'
            "[domain]\nu = [3.0, 4.0]\nv = [3.0, 4.0]\nnu = 5\nnv = 5\n",
            "far.toml",
        )
        result = runner.invoke(app, ["relate", str(enneper_spec), str(far)])
        assert result.exit_code == 2
        assert "share 0 nodes" in result.output

    def test_needs_two_inputs(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["relate", "-c", "enneper_cubic"])
        assert result.exit_code == 2
        assert "exactly two inputs" in result.output


@pytest.mark.usefixtures("isolated_home")
class TestSearch:
    """Self-CPG residual search."""

    def test_fixed_enneper(self, runner: CliRunner, isolated_home: Path) -> None:
        report = isolated_home / "search.json"
        result = runner.invoke(app, ["search", "-c", "enneper_cubic", "-r", str(report)])
        assert result.exit_code == 0, result.output
        document = _report(report)
        assert _check_names(document) == ["self_cpg_search"]
        results = document["results"]
        assert isinstance(results, dict)
        assert results["search"]["evaluations"] == 1

    def test_fixed_circle_fails(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["search", "-c", "circle", "--domain=-0.5:0.5,-0.5:0.5"])
        assert result.exit_code == 1

    def test_family_from_spec(
        self, runner: CliRunner, write_spec: Callable[[str, str], Path], isolated_home: Path
    ) -> None:
        path = write_spec(
            '[curve]\nx = "t^2"\ny = "t^3/3 - t"\n\n'
            "[domain]\nu = [-0.5, 0.5]\nv = [-0.5, 0.5]\nnu = 3\nnv = 3\n\n"
            "[search]\nx_powers = [2]\ny_powers = [1, 3]\n"
            "initial = [1.0, -1.0, 0.3333333333333333]\nbudget = 40\nseed = 3\n",
            "family.toml",
        )
        report = isolated_home / "family.json"
        result = runner.invoke(app, ["search", str(path), "--restarts", "2", "-r", str(report)])
        assert result.exit_code == 0, result.output
        assert "Best coefficients" in result.output
        search = _report(report)["results"]["search"]  # type: ignore[index]
        assert len(search["best_theta"]) == 3


@pytest.mark.usefixtures("isolated_home")
class TestCatalog:
    """Listing and exporting catalog entries."""

    def test_listing(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["catalog"])
        assert result.exit_code == 0, result.output
        for name in ("circle", "enneper_cubic", "weak_cpg"):
            assert name in result.output

    def test_print_entry(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["catalog", "weak_cpg", "--param", "k=2"])
        assert result.exit_code == 0, result.output
        assert "[curve]" in result.output
        assert "t^6" in result.output

    def test_written_entry_verifies(self, runner: CliRunner, isolated_home: Path) -> None:
        path = isolated_home / "enneper_cubic.toml"
        result = runner.invoke(app, ["catalog", "enneper_cubic", "--out", str(path)])
        assert result.exit_code == 0, result.output
        result = runner.invoke(app, ["verify", str(path), *SMALL])
        assert result.exit_code == 0, result.output

    def test_unknown_entry(self, runner: CliRunner) -> None:
        result = runner.invoke(app, ["catalog", "nonsense"])
        assert result.exit_code == 2


@pytest.mark.usefixtures("isolated_home")
class TestGlobalOptions:
    """Settings sources selected on the command line."""

    def test_run_config_enables_timings(
        self, runner: CliRunner, enneper_spec: Path, isolated_home: Path
    ) -> None:
        config = isolated_home / "run.toml"
        config.write_text("[output]\ninclude_timings = true\n", encoding="utf-8")
        report = isolated_home / "timed.json"
        result = runner.invoke(
            app, ["--config", str(config), "verify", str(enneper_spec), "-r", str(report)]
        )
        assert result.exit_code == 0, result.output
        assert isinstance(_report(report)["timings"], dict)

    def test_missing_run_config(self, runner: CliRunner, enneper_spec: Path) -> None:
        result = runner.invoke(app, ["--config", "absent.toml", "verify", str(enneper_spec)])
        assert result.exit_code == 2
        assert "Cannot load config file" in result.output

    def test_inconsistent_tolerances_from_environment(
        self, runner: CliRunner, enneper_spec: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("MINSURF_NUMERICS__CHECK_TOL", "1e-12")
        result = runner.invoke(app, ["verify", str(enneper_spec)])
        assert result.exit_code == 2
        assert "must not be tighter than quad_tol" in result.output
