"""Settings models for hierarchical configuration."""

from typing import Literal, Self

from pydantic import BaseModel, Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


type LevelName = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


class LoggingSettings(BaseModel):
    """Logging configuration settings.

    Attributes:
        verbosity: Logging verbosity level (0=WARNING, 1=INFO, 2=DEBUG)
        format: Log output format ("standard", "json", or "minimal")
        levels: Per-namespace levels below ``minsurf``, for example
            ``{"bjorling.quadrature" = "DEBUG"}`` to trace refinement alone.
        capture_warnings: Route numpy and scipy warnings through the handler.

    """

    verbosity: int = Field(default=0, ge=0, le=2)
    format: Literal["standard", "json", "minimal"] = "standard"
    levels: dict[str, LevelName] = Field(default_factory=dict)
    capture_warnings: bool = True


class NumericsSettings(BaseModel):
    """Tolerances and discretization knobs shared by the numerical packages.

    Attributes:
        quad_tol: Relative tolerance of the adaptive line quadrature.
        check_tol: Scale-normalized tolerance of symmetry and minimality checks.
        registration_tol: Tolerance of Procrustes-based checks.
        max_refinement_levels: Bisection depth before quadrature gives up.
        ray_step: Longest initial quadrature interval on rays from the base point.
        samples: Default sample count along curves.

    """

    quad_tol: float = Field(default=1e-10, gt=0.0, lt=1e-2)
    check_tol: float = Field(default=1e-8, gt=0.0)
    registration_tol: float = Field(default=1e-6, gt=0.0)
    max_refinement_levels: int = Field(default=16, ge=1, le=30)
    ray_step: float = Field(default=0.1, gt=0.0)
    samples: int = Field(default=41, ge=5)

    @model_validator(mode="after")
    def _check_tolerance_order(self) -> Self:
        if self.check_tol < self.quad_tol:
            msg = (
                f"check_tol ({self.check_tol:g}) must not be tighter than "
                f"quad_tol ({self.quad_tol:g})"
            )
            raise ValueError(msg)
        return self


class SearchSettings(BaseModel):
    """Defaults for the self-CPG residual search."""

    restarts: int = Field(default=5, ge=1)
    budget: int = Field(default=2000, ge=1)
    seed: int = 0
    workers: int = Field(default=1, ge=1)


class OutputSettings(BaseModel):
    """Mesh and report output preferences."""

    mesh_format: Literal["obj", "ply"] = "obj"
    include_timings: bool = False
    normals: bool = True


class AppSettings(BaseSettings):
    """Application-wide settings with hierarchical configuration.

    Sources, lowest precedence first: model defaults, the global config file
    (~/.minsurf/config.toml), the project config file (.minsurf/config.toml),
    environment variables (MINSURF_*), CLI overrides.
    """

    model_config = SettingsConfigDict(
        env_prefix="MINSURF_",
        env_nested_delimiter="__",
        extra="ignore",
    )

    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    numerics: NumericsSettings = Field(default_factory=NumericsSettings)
    search: SearchSettings = Field(default_factory=SearchSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)
