"""Logging configuration driven by :class:`minsurf_settings.LoggingSettings`."""

from __future__ import annotations

import json
import logging
import sys
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from minsurf_settings.models import LoggingSettings

ROOT_LOGGER_NAME = "minsurf"
WARNINGS_LOGGER_NAME = "py.warnings"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def package_of(logger_name: str) -> str:
    """Return the minsurf package a logger belongs to (``"bjorling"``, ...).

    Records routed from :mod:`warnings` report ``"warnings"``.
    """
    if logger_name == WARNINGS_LOGGER_NAME:
        return "warnings"
    parts = logger_name.split(".")
    if parts[0] == ROOT_LOGGER_NAME and len(parts) > 1:
        return parts[1]
    return parts[0]


class JsonFormatter(logging.Formatter):
    """One JSON object per record, tagged with the emitting package."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as JSON."""
        log_data: dict[str, Any] = {
            "timestamp": self.formatTime(record, self.datefmt),
            "logger": record.name,
            "package": package_of(record.name),
            "level": record.levelname,
            "message": record.getMessage(),
        }
        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)
        return json.dumps(log_data)


def _get_log_level(verbosity: int) -> int:
    """Map verbosity (0, 1, 2+) to WARNING, INFO, DEBUG."""
    if verbosity <= 0:
        return logging.WARNING
    if verbosity == 1:
        return logging.INFO
    return logging.DEBUG


def _get_formatter(format_style: str) -> logging.Formatter:
    if format_style == "minimal":
        return logging.Formatter(fmt="%(levelname)s - %(message)s")
    if format_style == "json":
        return JsonFormatter(datefmt=DATE_FORMAT)
    return logging.Formatter(
        fmt="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt=DATE_FORMAT,
    )


def _reset_namespace_levels() -> None:
    prefix = f"{ROOT_LOGGER_NAME}."
    for name, existing in logging.Logger.manager.loggerDict.items():
        if name.startswith(prefix) and isinstance(existing, logging.Logger):
            existing.setLevel(logging.NOTSET)


def configure_logging(settings: LoggingSettings) -> None:
    """Install a single stderr handler on the ``minsurf`` logger.

    Verbosity sets the level of the whole namespace and ``settings.levels``
    overrides it per package or module, so ``{"bjorling.quadrature": "DEBUG"}``
    traces the quadrature refinement without the rest of the DEBUG output.
    With ``capture_warnings`` the same handler receives numpy and scipy
    warnings (overflow in a patch, a stalled optimizer). Calling this again
    replaces the previous configuration.

    Args:
        settings: Verbosity, format and per-namespace levels.

    """
    level = _get_log_level(settings.verbosity)

    logger = logging.getLogger(ROOT_LOGGER_NAME)
    logger.setLevel(level)
    logger.handlers.clear()
    _reset_namespace_levels()
    for name, override in settings.levels.items():
        logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}").setLevel(override)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(_get_formatter(settings.format))
    logger.addHandler(handler)
    logger.propagate = False

    warnings_logger = logging.getLogger(WARNINGS_LOGGER_NAME)
    warnings_logger.handlers.clear()
    logging.captureWarnings(settings.capture_warnings)
    if settings.capture_warnings:
        warnings_logger.addHandler(handler)
        warnings_logger.propagate = False
    else:
        warnings_logger.propagate = True


__all__ = [
    "ROOT_LOGGER_NAME",
    "WARNINGS_LOGGER_NAME",
    "JsonFormatter",
    "configure_logging",
    "package_of",
]
