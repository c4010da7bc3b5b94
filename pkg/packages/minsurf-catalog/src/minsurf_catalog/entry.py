"""Catalog entry types."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Mapping

    from minsurf_bjorling import DomainGrid, Strip


@dataclass(frozen=True)
class StripSources:
    """Expression text a strip was built from.

    ``normal`` is set for explicit strips; planar strips carry ``phi`` instead.
    """

    x: str
    y: str
    z: str = "0"
    normal: tuple[str, str, str] | None = None
    phi: float | None = None


@dataclass(frozen=True)
class ExpectedProperties:
    """Symmetry verdicts an entry is known to have; ``None`` when not applicable or unknown.

    ``weak_cpg_order`` is the exponent ``m`` of the weak-CPG family and
    ``dihedral_order`` the largest domain rotation order realised by space.
    """

    self_cpg: bool | None = None
    self_adjoint: bool | None = None
    weak_cpg_order: int | None = None
    dihedral_order: int | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    strip: Strip
    sources: StripSources
    grid: DomainGrid
    parameters: Mapping[str, float] = field(default_factory=dict)
    oracle: str | None = None
    expected: ExpectedProperties = field(default_factory=ExpectedProperties)
    cpg_partner: str | None = None
    description: str = ""
