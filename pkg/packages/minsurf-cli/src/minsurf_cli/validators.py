"""Input validators for minsurf CLI options."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Protocol

from pydantic import BaseModel, ValidationError, field_validator, model_validator

_GRID_PATTERN = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")
_PARAMETER_PATTERN = re.compile(r"^\s*([A-Za-z_]\w*)\s*=\s*(\S+)\s*$")


@dataclass(slots=True)
class ValidationResult[T]:
    """Result of input validation, containing either a value or error message."""

    is_valid: bool
    value: T | None = None
    error_message: str | None = None

    @classmethod
    def success(cls, value: T) -> ValidationResult[T]:
        return cls(is_valid=True, value=value)

    @classmethod
    def failure(cls, message: str) -> ValidationResult[T]:
        return cls(is_valid=False, error_message=message)


class Validator[T](Protocol):
    """Protocol implemented by all CLI validators."""

    def validate(self, value: str, /) -> ValidationResult[T]:
        """Validate ``value`` and return a validation result."""
        ...


class _GridPayload(BaseModel):
    nu: int
    nv: int

    @model_validator(mode="after")
    def _at_least_two(self) -> _GridPayload:
        if self.nu < 2 or self.nv < 2:  # noqa: PLR2004
            msg = "grid needs at least 2 nodes per direction"
            raise ValueError(msg)
        return self


class _DomainPayload(BaseModel):
    u: tuple[float, float]
    v: tuple[float, float]

    @field_validator("u", "v")
    @classmethod
    def _ordered(cls, value: tuple[float, float]) -> tuple[float, float]:
        low, high = value
        if not (math.isfinite(low) and math.isfinite(high)) or low >= high:
            msg = "range must be finite with min < max"
            raise ValueError(msg)
        return value


class GridValidator(Validator[tuple[int, int]]):
    """Validator for ``NUxNV`` grid resolutions."""

    _ERROR_MESSAGE = "Invalid grid: use NUxNV with both sizes >= 2 (e.g., 101x101)"

    def validate(self, grid: str) -> ValidationResult[tuple[int, int]]:
        match = _GRID_PATTERN.match(grid)
        if match is None:
            return ValidationResult[tuple[int, int]].failure(self._ERROR_MESSAGE)
        try:
            payload = _GridPayload(nu=int(match.group(1)), nv=int(match.group(2)))
        except ValidationError:
            return ValidationResult[tuple[int, int]].failure(self._ERROR_MESSAGE)
        return ValidationResult[tuple[int, int]].success((payload.nu, payload.nv))


type DomainRanges = tuple[tuple[float, float], tuple[float, float]]


class DomainValidator(Validator[DomainRanges]):
    """Validator for ``uMIN:uMAX,vMIN:vMAX`` domain rectangles."""

    _ERROR_MESSAGE = "Invalid domain: use uMIN:uMAX,vMIN:vMAX with min < max (e.g., -1:1,-1:1)"

    def validate(self, domain: str) -> ValidationResult[DomainRanges]:
        try:
            u_text, v_text = domain.split(",")
            u = tuple(float(part) for part in u_text.split(":"))
            v = tuple(float(part) for part in v_text.split(":"))
            payload = _DomainPayload.model_validate({"u": u, "v": v})
        except (ValueError, ValidationError):
            return ValidationResult[DomainRanges].failure(self._ERROR_MESSAGE)
        return ValidationResult[DomainRanges].success((payload.u, payload.v))


class ParameterValidator(Validator[tuple[str, float]]):
    """Validator for ``name=value`` catalog parameters."""

    _ERROR_MESSAGE = "Invalid parameter: use name=value with a numeric value (e.g., k=2)"

    def validate(self, parameter: str) -> ValidationResult[tuple[str, float]]:
        match = _PARAMETER_PATTERN.match(parameter)
        if match is None:
            return ValidationResult[tuple[str, float]].failure(self._ERROR_MESSAGE)
        try:
            value = float(match.group(2))
        except ValueError:
            return ValidationResult[tuple[str, float]].failure(self._ERROR_MESSAGE)
        return ValidationResult[tuple[str, float]].success((match.group(1), value))


grid_validator = GridValidator()
domain_validator = DomainValidator()
parameter_validator = ParameterValidator()

__all__ = [
    "DomainRanges",
    "DomainValidator",
    "GridValidator",
    "ParameterValidator",
    "ValidationResult",
    "Validator",
    "domain_validator",
    "grid_validator",
    "parameter_validator",
]
