"""Atomic file replacement."""

from __future__ import annotations

import contextlib
import os
import tempfile
from pathlib import Path

from minsurf_logging import get_logger

from minsurf_export.exceptions import ExportIOError

logger = get_logger("export.atomic")


def write_atomic(path: Path, data: bytes) -> None:
    """Write ``data`` to ``path`` through a synced temporary file in the same directory.

    Raises:
        ExportIOError: If the directory, the temporary file or the rename fails.

    """
    temp_fd = None
    temp_path = None
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        temp_fd, temp_name = tempfile.mkstemp(
            suffix=".tmp",
            prefix=f".{path.name}.",
            dir=path.parent,
            text=False,
        )
        temp_path = Path(temp_name)
        with os.fdopen(temp_fd, "wb") as temp_file:
            temp_file.write(data)
            temp_file.flush()
            os.fsync(temp_file.fileno())
        temp_fd = None

        temp_path.replace(path)
        temp_path = None
    except OSError as exc:
        msg = f"Failed to write {path}: {exc}"
        raise ExportIOError(msg, cause=exc, path=str(path)) from exc
    finally:
        if temp_fd is not None:
            with contextlib.suppress(OSError):
                os.close(temp_fd)
        if temp_path is not None and temp_path.exists():
            with contextlib.suppress(OSError):
                temp_path.unlink()
    logger.info("Wrote %s (%d bytes)", path, len(data))
