"""Configuration package for minsurf."""

from minsurf_settings.configuration import get_settings
from minsurf_settings.exceptions import ConfigFileError
from minsurf_settings.models import (
    AppSettings,
    LoggingSettings,
    NumericsSettings,
    OutputSettings,
    SearchSettings,
)

__all__ = [
    "AppSettings",
    "ConfigFileError",
    "LoggingSettings",
    "NumericsSettings",
    "OutputSettings",
    "SearchSettings",
    "get_settings",
]
