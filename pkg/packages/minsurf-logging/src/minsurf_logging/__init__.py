"""Logging helpers for minsurf.

Every package obtains its logger through :func:`get_logger`, named after the
workspace package that emits it (``bjorling.quadrature``, ``symmetry.search``).
Per-package levels and the single handler are set by :func:`configure_logging`.
"""

import logging
from typing import Protocol, runtime_checkable

from minsurf_logging.config import ROOT_LOGGER_NAME, configure_logging, package_of

PACKAGES = frozenset({"analytic", "bjorling", "catalog", "cli", "export", "settings", "symmetry"})


@runtime_checkable
class Logger(Protocol):
    """Subset of :class:`logging.Logger` used by minsurf packages."""

    def debug(self, msg: object, *args: object) -> None:
        """Log a debug message."""
        ...

    def info(self, msg: object, *args: object) -> None:
        """Log an info message."""
        ...

    def warning(self, msg: object, *args: object) -> None:
        """Log a warning message."""
        ...

    def error(self, msg: object, *args: object) -> None:
        """Log an error message."""
        ...


def get_logger(name: str) -> logging.Logger:
    """Return the logger ``minsurf.<name>``.

    Args:
        name: Dotted path starting with a workspace package, for example
            ``"bjorling.patch"``.

    Returns:
        The shared logger instance for that name.

    Raises:
        ValueError: If ``name`` does not start with one of ``PACKAGES``.

    """
    package = name.split(".", 1)[0]
    if package not in PACKAGES:
        msg = f"logger {name!r} is outside the minsurf packages {sorted(PACKAGES)}"
        raise ValueError(msg)
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")


__all__ = ["PACKAGES", "Logger", "configure_logging", "get_logger", "package_of"]
