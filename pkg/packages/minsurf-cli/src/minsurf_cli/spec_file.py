"""TOML spec files describing a strip, its domain and the requested checks."""

from __future__ import annotations

import math
import tomllib
from typing import TYPE_CHECKING, Literal, Self

import tomli_w
from minsurf_analytic import parse_expr
from minsurf_bjorling import AnalyticCurve, DomainGrid, make_planar_strip, make_strip
from minsurf_logging import get_logger
from minsurf_symmetry import CurveFamily
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from minsurf_cli.exceptions import SpecFileError
from minsurf_cli.suites import CHECK_NAMES

if TYPE_CHECKING:
    from pathlib import Path

    from minsurf_bjorling import Strip
    from minsurf_catalog import CatalogEntry

logger = get_logger("cli.spec_file")


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class CurveSection(_Section):
    x: str
    y: str
    z: str = "0"
    phi: float | None = None


class NormalSection(_Section):
    x: str
    y: str
    z: str


class DomainSection(_Section):
    u: tuple[float, float]
    v: tuple[float, float]
    nu: int = Field(41, ge=2)
    nv: int = Field(41, ge=2)
    base: tuple[float, float] = (0.0, 0.0)

    @field_validator("u", "v")
    @classmethod
    def _ordered(cls, value: tuple[float, float]) -> tuple[float, float]:
        low, high = value
        if not (math.isfinite(low) and math.isfinite(high)) or low >= high:
            msg = "range must be finite with min < max"
            raise ValueError(msg)
        return value

    def to_grid(self) -> DomainGrid:
        return DomainGrid.build(self.u, self.v, self.nu, self.nv, complex(*self.base))


class ChecksSection(_Section):
    names: tuple[str, ...] = ()
    tol: float | None = Field(None, gt=0.0)

    @field_validator("names")
    @classmethod
    def _known(cls, names: tuple[str, ...]) -> tuple[str, ...]:
        unknown = [name for name in names if name not in CHECK_NAMES]
        if unknown:
            msg = f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(CHECK_NAMES)}"
            raise ValueError(msg)
        return tuple(dict.fromkeys(names))


class SearchSection(_Section):
    x_powers: tuple[int, ...]
    y_powers: tuple[int, ...]
    initial: tuple[float, ...]
    lower: tuple[float, ...] | None = None
    upper: tuple[float, ...] | None = None
    budget: int | None = Field(None, ge=1)
    seed: int | None = None

    def family(self) -> CurveFamily:
        """Build the coefficient family.

        Raises:
            ValueError: If parities or lengths do not match.

        """
        return CurveFamily.polynomial(
            self.x_powers, self.y_powers, self.initial, self.lower, self.upper
        )


class OutputSection(_Section):
    mesh: str | None = None
    format: Literal["obj", "ply"] | None = None
    report: str | None = None


class SpecFile(_Section):
    """Parsed spec file; ``[curve]`` and ``[domain]`` are required.

    A ``[normal]`` section gives an explicit strip. Without it the curve must
    lie in the XY-plane and ``phi`` (default pi/2) selects the planar frame.
    """

    curve: CurveSection
    normal: NormalSection | None = None
    domain: DomainSection
    checks: ChecksSection = Field(default_factory=ChecksSection)
    search: SearchSection | None = None
    output: OutputSection = Field(default_factory=OutputSection)

    @model_validator(mode="after")
    def _normal_or_phi(self) -> Self:
        if self.normal is not None and self.curve.phi is not None:
            msg = "give either [normal] or curve.phi, not both"
            raise ValueError(msg)
        return self

    @classmethod
    def from_text(cls, text: str, path: Path | str = "<string>") -> SpecFile:
        """Parse TOML text.

        Raises:
            SpecFileError: If the TOML is malformed or a section is invalid.

        """
        try:
            data = tomllib.loads(text)
        except tomllib.TOMLDecodeError as exc:
            msg = f"{path}: {exc}"
            raise SpecFileError(msg, path) from exc
        try:
            return cls.model_validate(data)
        except ValidationError as exc:
            first = exc.errors()[0]
            location = ".".join(str(part) for part in first["loc"]) or "spec"
            msg = f"{path}: {location}: {first['msg']}"
            raise SpecFileError(msg, path, field=location) from exc

    @classmethod
    def from_file(cls, path: Path) -> tuple[SpecFile, bytes]:
        """Load a spec file and return it with its raw bytes.

        Raises:
            SpecFileError: If the file cannot be read or parsed.

        """
        try:
            raw = path.read_bytes()
        except OSError as exc:
            msg = f"Cannot read spec file {path}: {exc.strerror or exc}"
            raise SpecFileError(msg, path) from exc
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            msg = f"{path}: spec files must be UTF-8"
            raise SpecFileError(msg, path) from exc
        logger.debug("Loaded spec file %s (%d bytes)", path, len(raw))
        return cls.from_text(text, path), raw

    @classmethod
    def from_entry(cls, entry: CatalogEntry) -> SpecFile:
        sources = entry.sources
        normal = None
        if sources.normal is not None:
            normal = NormalSection(x=sources.normal[0], y=sources.normal[1], z=sources.normal[2])
        grid = entry.grid
        return cls(
            curve=CurveSection(x=sources.x, y=sources.y, z=sources.z, phi=sources.phi),
            normal=normal,
            domain=DomainSection(
                u=grid.u_range,
                v=grid.v_range,
                nu=grid.nu,
                nv=grid.nv,
                base=(grid.base_point.real, grid.base_point.imag),
            ),
        )

    def to_toml(self) -> str:
        return tomli_w.dumps(self.model_dump(mode="json", exclude_none=True))

    def build_strip(self) -> Strip:
        """Construct the strip; parse and strip errors propagate unchanged."""
        curve = AnalyticCurve.from_sources(self.curve.x, self.curve.y, self.curve.z)
        if self.normal is not None:
            section = self.normal
            return make_strip(
                curve, (parse_expr(section.x), parse_expr(section.y), parse_expr(section.z))
            )
        if self.curve.phi is None:
            return make_planar_strip(curve)
        return make_planar_strip(curve, self.curve.phi)

    def search_family(self) -> CurveFamily:
        """Coefficient family of [search], or the spec curve alone when there is none.

        Raises:
            SpecFileError: If the family is malformed.

        """
        if self.search is None:
            return CurveFamily.fixed(
                AnalyticCurve.from_sources(self.curve.x, self.curve.y, self.curve.z)
            )
        try:
            return self.search.family()
        except ValueError as exc:
            msg = f"invalid [search] section: {exc}"
            raise SpecFileError(msg) from exc

    def with_overrides(
        self,
        *,
        grid: tuple[int, int] | None = None,
        domain: tuple[tuple[float, float], tuple[float, float]] | None = None,
        tol: float | None = None,
    ) -> SpecFile:
        """Return a copy with command-line overrides applied."""
        section = self.domain
        if grid is not None:
            section = section.model_copy(update={"nu": grid[0], "nv": grid[1]})
        if domain is not None:
            section = section.model_copy(update={"u": domain[0], "v": domain[1]})
        checks = self.checks
        if tol is not None:
            checks = checks.model_copy(update={"tol": tol})
        return self.model_copy(update={"domain": section, "checks": checks})
