"""Result records shared by the symmetry tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Mapping

    import numpy as np
    from numpy.typing import NDArray

type Detail = float | int | str | bool | None


@dataclass(frozen=True)
class SymmetryReport:
    """Verdict of one symmetry relation.

    ``residual`` is divided by the patch scale; ``orientation``, ``sigma`` and
    ``sign`` record which variant of the relation matched best. A report that
    is not ``applicable`` never passes.
    """

    relation: str
    residual: float
    tolerance: float
    passes: bool
    orientation: str | None = None
    sigma: int | None = None
    sign: int | None = None
    applicable: bool = True
    details: Mapping[str, Detail] = field(default_factory=dict)

    def as_record(self) -> dict[str, object]:
        record: dict[str, object] = {
            "name": self.relation,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.passes,
            "applicable": self.applicable,
        }
        for key in ("orientation", "sigma", "sign"):
            value = getattr(self, key)
            if value is not None:
                record[key] = value
        if self.details:
            record["details"] = dict(self.details)
        return record


@dataclass(frozen=True)
class CongruenceResult:
    """Sampled congruence of two patches: ``B ≈ scale * rotation @ A + translation``."""

    rotation: NDArray[np.float64]
    translation: NDArray[np.float64]
    scale: float
    residual: float
    tolerance: float
    passes: bool

    def as_record(self) -> dict[str, object]:
        return {
            "name": "sampled_congruence",
            "residual": self.residual,
            "tolerance": self.tolerance,
            "pass": self.passes,
            "rotation": self.rotation.tolist(),
            "translation": self.translation.tolist(),
            "scale": self.scale,
        }
