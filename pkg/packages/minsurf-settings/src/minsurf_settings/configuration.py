"""Settings loading helpers."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

from pydantic_settings import BaseSettings, PydanticBaseSettingsSource

from minsurf_settings.models import AppSettings
from minsurf_settings.sources import GlobalConfigSource, ProjectConfigSource, RunConfigSource

if TYPE_CHECKING:
    from pathlib import Path

    from pydantic.fields import FieldInfo


class InitSettingsSource(PydanticBaseSettingsSource):
    """Settings source for CLI overrides passed as nested dictionaries."""

    def __init__(self, settings_cls: type, init_kwargs: dict[str, Any]) -> None:
        super().__init__(settings_cls)
        self.init_kwargs = init_kwargs

    def __call__(self) -> dict[str, Any]:
        """Return the CLI override dictionary."""
        return self.init_kwargs

    def get_field_value(self, field: FieldInfo, field_name: str) -> tuple[Any, str, bool]:
        """Return a value for ``field_name`` if it exists in CLI overrides."""
        del field
        if field_name in self.init_kwargs:
            return self.init_kwargs[field_name], field_name, True
        return None, field_name, False


def get_settings(
    project_root: Path | None = None,
    cli_overrides: dict[str, Any] | None = None,
    config_file: Path | None = None,
) -> AppSettings:
    """Load application settings from hierarchical sources.

    Precedence, highest first: CLI overrides, environment variables, the run
    config file, project config file, global config file, model defaults.

    Args:
        project_root: Directory holding ``.minsurf/config.toml``; defaults to cwd.
        cli_overrides: Nested values from command-line flags.
        config_file: Config pinned to one run, such as a file kept next to a
            spec file so its tolerances travel with it.

    Raises:
        ConfigFileError: If ``config_file`` is missing or malformed.
        ValidationError: If the merged values are invalid.

    """
    overrides = cli_overrides or {}

    class ConfiguredAppSettings(AppSettings):
        """AppSettings subclass with customized source ordering."""

        @classmethod
        def settings_customise_sources(
            cls,
            settings_cls: type[BaseSettings],
            init_settings: PydanticBaseSettingsSource,
            env_settings: PydanticBaseSettingsSource,
            dotenv_settings: PydanticBaseSettingsSource,
            file_secret_settings: PydanticBaseSettingsSource,
        ) -> tuple[PydanticBaseSettingsSource, ...]:
            del init_settings, dotenv_settings, file_secret_settings
            run_sources = (
                (RunConfigSource(settings_cls, config_file),) if config_file is not None else ()
            )
            return (
                InitSettingsSource(settings_cls, overrides),
                env_settings,
                *run_sources,
                ProjectConfigSource(settings_cls, project_root=project_root),
                GlobalConfigSource(settings_cls),
            )

    return ConfiguredAppSettings()
