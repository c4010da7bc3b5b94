"""Settings sources that read TOML configuration files."""

import tomllib
from pathlib import Path
from typing import Any

from minsurf_logging import get_logger
from pydantic.fields import FieldInfo
from pydantic_settings import PydanticBaseSettingsSource

from minsurf_settings.exceptions import ConfigFileError

CONFIG_DIRNAME = ".minsurf"
CONFIG_FILENAME = "config.toml"

logger = get_logger("settings.sources")


class TomlConfigSource(PydanticBaseSettingsSource):
    """Load one TOML file.

    A missing or malformed file contributes nothing, unless ``required`` is
    set, in which case it raises :class:`ConfigFileError`.
    """

    def __init__(self, settings_cls: type, file_path: Path, *, required: bool = False) -> None:
        super().__init__(settings_cls)
        self.file_path = file_path
        self.required = required
        self._config_data: dict[str, Any] | None = None

    def _load_config(self) -> dict[str, Any]:
        if self._config_data is not None:
            return self._config_data

        if not self.file_path.exists():
            if self.required:
                raise ConfigFileError(self.file_path, "file does not exist")
            self._config_data = {}
            return self._config_data

        try:
            with self.file_path.open("rb") as f:
                self._config_data = tomllib.load(f)
        except (OSError, tomllib.TOMLDecodeError) as e:
            if self.required:
                raise ConfigFileError(self.file_path, str(e)) from e
            logger.warning(
                "Failed to load config from %s: %s. Using defaults.",
                self.file_path,
                e,
            )
            self._config_data = {}

        return self._config_data

    def __call__(self) -> dict[str, Any]:
        """Return the whole parsed document."""
        return self._load_config()

    def get_field_value(
        self,
        field: FieldInfo,
        field_name: str,
    ) -> tuple[Any, str, bool]:
        """Return the TOML table named ``field_name`` when present."""
        del field
        config = self._load_config()
        if field_name in config:
            return config[field_name], field_name, True
        return None, field_name, False


class GlobalConfigSource(TomlConfigSource):
    """Settings source for ~/.minsurf/config.toml."""

    def __init__(self, settings_cls: type) -> None:
        super().__init__(settings_cls, Path.home() / CONFIG_DIRNAME / CONFIG_FILENAME)


class ProjectConfigSource(TomlConfigSource):
    """Settings source for ./.minsurf/config.toml below the project root."""

    def __init__(self, settings_cls: type, project_root: Path | None = None) -> None:
        if project_root is None:
            project_root = Path.cwd()
        super().__init__(settings_cls, project_root / CONFIG_DIRNAME / CONFIG_FILENAME)
        self.project_root = project_root


class RunConfigSource(TomlConfigSource):
    """Settings source for a config file given for one run (``--config``)."""

    def __init__(self, settings_cls: type, file_path: Path) -> None:
        super().__init__(settings_cls, file_path, required=True)
