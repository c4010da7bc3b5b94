"""Versioned JSON run reports."""

from __future__ import annotations

import hashlib
import json
from importlib.metadata import PackageNotFoundError, version
from typing import TYPE_CHECKING, Any, Self

import numpy as np
from minsurf_logging import get_logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from minsurf_export.atomic import write_atomic
from minsurf_export.exceptions import ExportDataError

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping
    from pathlib import Path

logger = get_logger("export.report")

REPORT_FORMAT_VERSION = "1.0"


def tool_version() -> str:
    try:
        return version("minsurf")
    except PackageNotFoundError:
        return "0.0.0"


def input_digest(data: bytes | str) -> str:
    """SHA-256 of the run's input, prefixed with the algorithm name."""
    raw = data.encode("utf-8") if isinstance(data, str) else data
    return "sha256:" + hashlib.sha256(raw).hexdigest()


def plain(value: object) -> object:
    """Convert numpy scalars and arrays inside nested containers to Python values."""
    if isinstance(value, np.ndarray):
        return plain(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, dict):
        items: dict[object, object] = value  # pyright: ignore[reportUnknownVariableType]
        return {str(key): plain(item) for key, item in items.items()}
    if isinstance(value, list | tuple):
        entries: list[object] = list(value)  # pyright: ignore[reportUnknownArgumentType]
        return [plain(item) for item in entries]
    return value


class CheckRecord(BaseModel):
    """One verdict in a report.

    Advisory and inapplicable checks are reported but never fail the run.
    Check-specific fields (orientation, fitted matrices, details) are kept as extras.
    """

    model_config = ConfigDict(extra="allow", populate_by_name=True, ser_json_inf_nan="strings")

    name: str
    residual: float | None = None
    tolerance: float | None = None
    passed: bool = Field(alias="pass")
    applicable: bool = True
    advisory: bool = False

    @property
    def counts(self) -> bool:
        return self.applicable and not self.advisory


def _empty_checks() -> list[CheckRecord]:
    return []


class ReportDocument(BaseModel):
    """Single JSON document describing one command run.

    ``timings`` stays ``None`` unless requested so that repeated runs produce
    identical bytes.
    """

    model_config = ConfigDict(ser_json_inf_nan="strings")

    version: str = Field(REPORT_FORMAT_VERSION, description="Report format version")
    tool_version: str = Field(default_factory=tool_version, description="minsurf version")
    command: str = Field(..., description="Command that produced the report")
    input_digest: str = Field(..., description="Digest of the input spec bytes")
    checks: list[CheckRecord] = Field(default_factory=_empty_checks)
    results: dict[str, Any] = Field(default_factory=dict, description="Non-verdict outputs")
    timings: dict[str, float] | None = Field(None, description="Wall-clock seconds per stage")

    @model_validator(mode="after")
    def _unique_checks(self) -> Self:
        names = [check.name for check in self.checks]
        duplicates = sorted({name for name in names if names.count(name) > 1})
        if duplicates:
            msg = f"checks reported more than once: {', '.join(duplicates)}"
            raise ValueError(msg)
        return self

    @property
    def passed(self) -> bool:
        """True when every counted check passes."""
        return all(check.passed for check in self.checks if check.counts)

    @property
    def failed_checks(self) -> list[str]:
        return [check.name for check in self.checks if check.counts and not check.passed]

    def to_json(self) -> str:
        return json.dumps(
            json.loads(self.model_dump_json(by_alias=True, exclude_none=False)),
            indent=2,
            sort_keys=True,
            ensure_ascii=False,
        )


def build_report(  # noqa: PLR0913
    command: str,
    source: bytes | str,
    records: Iterable[Mapping[str, object]],
    *,
    results: Mapping[str, Any] | None = None,
    timings: Mapping[str, float] | None = None,
    include_timings: bool = False,
) -> ReportDocument:
    """Assemble a report from check records.

    Raises:
        ExportDataError: If a record is malformed or a check name repeats.

    """
    try:
        return ReportDocument(
            command=command,
            input_digest=input_digest(source),
            checks=[CheckRecord.model_validate(plain(dict(record))) for record in records],
            results={key: plain(value) for key, value in (results or {}).items()},
            timings=dict(timings) if include_timings and timings is not None else None,
        )
    except ValidationError as exc:
        msg = f"Invalid report data: {exc.errors()[0]['msg']}"
        raise ExportDataError(msg, cause=exc, command=command) from exc


def write_report(document: ReportDocument, path: Path) -> None:
    """Write the report as indented, key-sorted JSON.

    Raises:
        ExportDataError: If the document holds values JSON cannot represent.
        ExportIOError: If the file cannot be written.

    """
    try:
        text = document.to_json()
    except (ValueError, TypeError) as exc:
        msg = f"Failed to serialize report: {exc}"
        raise ExportDataError(msg, cause=exc) from exc
    write_atomic(path, (text + "\n").encode("utf-8"))
    logger.info(
        "Report for %s: %d checks, %d failed",
        document.command,
        len(document.checks),
        len(document.failed_checks),
    )
