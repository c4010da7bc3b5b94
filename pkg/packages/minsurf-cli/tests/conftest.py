"""Shared fixtures for minsurf-cli tests.

- runner: A Typer CLI test runner for invoking commands
- enneper_spec: A spec file for Enneper's cubic on a small grid
- write_spec: Factory writing TOML text to a spec file
"""

from __future__ import annotations

import sys

if __name__ == "tests.conftest":
    module = sys.modules[__name__]
    module.__name__ = "minsurf_cli.tests.conftest"
    sys.modules[module.__name__] = module

from collections.abc import Callable
from pathlib import Path

import pytest
from typer.testing import CliRunner

ENNEPER_SPEC = """\
[curve]
x = "t^2"
y = "t^3/3 - t"

[domain]
u = [-1.0, 1.0]
v = [-1.0, 1.0]
nu = 11
nv = 11
"""


@pytest.fixture
def runner() -> CliRunner:
    """Provide a CLI test runner."""
    return CliRunner()


@pytest.fixture
def isolated_home(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Keep user and project config files out of CLI runs."""
    home = tmp_path / "home"
    home.mkdir()
    workdir = tmp_path / "work"
    workdir.mkdir()
    monkeypatch.setenv("HOME", str(home))
    monkeypatch.chdir(workdir)
    return workdir


@pytest.fixture
def write_spec(isolated_home: Path) -> Callable[[str, str], Path]:
    def write(text: str, name: str = "spec.toml") -> Path:
        path = isolated_home / name
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def enneper_spec(write_spec: Callable[[str, str], Path]) -> Path:
    return write_spec(ENNEPER_SPEC, "enneper.toml")
