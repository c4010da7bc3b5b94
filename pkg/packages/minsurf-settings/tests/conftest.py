"""Shared fixtures for minsurf-settings tests."""

from __future__ import annotations

import sys

if __name__ == "tests.conftest":
    module = sys.modules[__name__]
    module.__name__ = "minsurf_settings.tests.conftest"
    sys.modules[module.__name__] = module

from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from pathlib import Path


@pytest.fixture(autouse=True)
def isolated_home(tmp_path_factory: pytest.TempPathFactory, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Point the global config lookup at an empty home directory."""
    home = tmp_path_factory.mktemp("home")
    monkeypatch.setenv("HOME", str(home))
    for name in ("MINSURF_NUMERICS__QUAD_TOL", "MINSURF_LOGGING__VERBOSITY"):
        monkeypatch.delenv(name, raising=False)
    return home
