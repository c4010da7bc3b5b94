"""Rectangular parameter domains."""

from __future__ import annotations

import math
from typing import Self

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from minsurf_bjorling.exceptions import DomainGridError


class DomainGrid(BaseModel):
    """Uniform ``nu x nv`` grid over ``[u_min, u_max] x [v_min, v_max]``.

    Paths of integration start at ``base_point``.
    """

    model_config = ConfigDict(frozen=True)

    u_range: tuple[float, float]
    v_range: tuple[float, float]
    nu: int = Field(ge=2)
    nv: int = Field(ge=2)
    base_point: complex = 0j

    @model_validator(mode="after")
    def _check_ranges(self) -> Self:
        for label, (low, high) in (("u", self.u_range), ("v", self.v_range)):
            if not (math.isfinite(low) and math.isfinite(high)) or low >= high:
                msg = f"{label} range must be finite with min < max, got [{low}, {high}]"
                raise ValueError(msg)
        if not (math.isfinite(self.base_point.real) and math.isfinite(self.base_point.imag)):
            msg = "base point must be finite"
            raise ValueError(msg)
        return self

    @classmethod
    def build(
        cls,
        u_range: tuple[float, float],
        v_range: tuple[float, float],
        nu: int,
        nv: int,
        base_point: complex = 0j,
    ) -> DomainGrid:
        """Validate and construct a grid.

        Raises:
            DomainGridError: If bounds or resolution are invalid.

        """
        try:
            return cls(u_range=u_range, v_range=v_range, nu=nu, nv=nv, base_point=base_point)
        except ValidationError as exc:
            first = exc.errors()[0]
            raise DomainGridError(first["msg"], field=".".join(map(str, first["loc"]))) from exc

    def with_resolution(self, nu: int, nv: int) -> DomainGrid:
        return DomainGrid.build(self.u_range, self.v_range, nu, nv, self.base_point)

    @property
    def u(self) -> NDArray[np.float64]:
        return np.linspace(*self.u_range, self.nu)

    @property
    def v(self) -> NDArray[np.float64]:
        return np.linspace(*self.v_range, self.nv)

    @property
    def spacing(self) -> tuple[float, float]:
        return (
            (self.u_range[1] - self.u_range[0]) / (self.nu - 1),
            (self.v_range[1] - self.v_range[0]) / (self.nv - 1),
        )

    @property
    def diameter(self) -> float:
        return math.hypot(self.u_range[1] - self.u_range[0], self.v_range[1] - self.v_range[0])

    def points(self) -> NDArray[np.complex128]:
        """Complex grid nodes with shape ``(nu, nv)``; the u index comes first."""
        return self.u[:, None] + 1j * self.v[None, :]

    def contains(self, w: NDArray[np.complex128], slack: float = 1e-12) -> NDArray[np.bool_]:
        return (
            (w.real >= self.u_range[0] - slack)
            & (w.real <= self.u_range[1] + slack)
            & (w.imag >= self.v_range[0] - slack)
            & (w.imag <= self.v_range[1] + slack)
        )

    @property
    def symmetric(self) -> bool:
        """True when both ranges are centred on 0."""
        return self.u_range[0] == -self.u_range[1] and self.v_range[0] == -self.v_range[1]
