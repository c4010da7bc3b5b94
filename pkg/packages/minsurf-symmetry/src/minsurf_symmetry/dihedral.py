"""Dihedral identities of the isotropic curve, self-adjointness and generator search."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from minsurf_logging import get_logger

from minsurf_symmetry.exceptions import DegeneratePointSetError
from minsurf_symmetry.matrices import (
    LAMBDA,
    LAMBDA_DOMAIN,
    R,
    R_REAL,
    RHO_DOMAIN,
    T,
    dihedral_group,
    tau,
    weak_cpg_generator,
    yz_angle,
)
from minsurf_symmetry.registration import RegistrationFit, fit_orthogonal
from minsurf_symmetry.reports import SymmetryReport
from minsurf_symmetry.sampling import (
    MappedNodes,
    mapped_nodes,
    max_distance,
    node_values,
    surface_f,
    vertex_value,
)

if TYPE_CHECKING:
    from collections.abc import Callable

    from minsurf_bjorling import SurfacePatch
    from numpy.typing import NDArray

logger = get_logger("symmetry.dihedral")

ORTHOGONALITY_TOLERANCE = 1e-8
REFERENCE_TOLERANCE = 1e-6
MIN_NODES = 3
TIE_SLACK = 1e-12

type DomainMap = Callable[[NDArray[np.complex128]], NDArray[np.complex128]]
type SpaceMap = Callable[[NDArray[np.complex128]], NDArray[np.complex128]]


def _scaling(factor: complex) -> DomainMap:
    def mapping(w: NDArray[np.complex128]) -> NDArray[np.complex128]:
        return factor * w

    return mapping


def _rotation_about(center: complex, angle: float) -> DomainMap:
    turn = complex(math.cos(angle), math.sin(angle))

    def mapping(w: NDArray[np.complex128]) -> NDArray[np.complex128]:
        return center + turn * (w - center)

    return mapping


@dataclass(frozen=True)
class _Sampled:
    """Centred ``f`` at grid nodes and at their images."""

    nodes: MappedNodes
    at_nodes: NDArray[np.complex128]
    at_images: NDArray[np.complex128]


def _sample(patch: SurfacePatch, mapping: DomainMap, origin: NDArray[np.complex128]) -> _Sampled:
    nodes = mapped_nodes(patch.grid, mapping)
    at_images = surface_f(patch, nodes.images) if nodes.count else np.zeros((0, 3), complex)
    return _Sampled(
        nodes=nodes,
        at_nodes=node_values(patch, nodes) - origin,
        at_images=at_images - origin,
    )


def _first_best[V](items: list[tuple[float, V]], slack: float) -> tuple[float, V]:
    """Lowest residual; a later item must beat the current one by more than ``slack``."""
    best = items[0]
    for item in items[1:]:
        if item[0] < best[0] - slack:
            best = item
    return best


def _identity_report(
    patch: SurfacePatch,
    relation: str,
    space_map: SpaceMap,
    orientations: dict[str, DomainMap],
    tol: float,
    origin: NDArray[np.complex128],
) -> SymmetryReport:
    """Best orientation of ``space_map(f(w)) = f(mapping(w))`` over mapped nodes."""
    results: list[tuple[float, tuple[str, int]]] = []
    for label, mapping in orientations.items():
        sampled = _sample(patch, mapping, origin)
        if sampled.nodes.count == 0:
            continue
        raw = max_distance(space_map(sampled.at_nodes), sampled.at_images)
        results.append((raw, (label, sampled.nodes.count)))
    if not results:
        return SymmetryReport(
            relation=relation,
            residual=math.inf,
            tolerance=tol,
            passes=False,
            applicable=False,
            details={"reason": "no mapped nodes inside the grid"},
        )
    raw, (label, count) = _first_best(results, TIE_SLACK * patch.scale)
    residual = raw / patch.scale
    logger.info("%s: residual %.3e (orientation %s)", relation, residual, label)
    return SymmetryReport(
        relation=relation,
        residual=residual,
        tolerance=tol,
        passes=residual <= tol,
        orientation=label,
        details={"raw_residual": raw, "nodes": count},
    )


def _fitted_rho_report(
    patch: SurfacePatch, tol: float, origin: NDArray[np.complex128]
) -> SymmetryReport:
    """Least-squares complex matrix ``M`` with ``M f(w) = f(ρ^{±1} w)``."""
    reference = R @ np.diag([1.0, 1j, 1j])
    best: tuple[float, str, NDArray[np.complex128], int] | None = None
    for label, power in (("rho", 1), ("rho^-1", -1)):
        sampled = _sample(patch, _scaling(RHO_DOMAIN**power), origin)
        if sampled.nodes.count < MIN_NODES:
            continue
        solution, *_ = np.linalg.lstsq(sampled.at_nodes, sampled.at_images, rcond=None)
        raw = max_distance(sampled.at_nodes @ solution, sampled.at_images)
        if best is None or raw < best[0] - TIE_SLACK * patch.scale:
            best = (raw, label, solution.T, sampled.nodes.count)
    if best is None:
        return SymmetryReport(
            relation="rho_fitted",
            residual=math.inf,
            tolerance=tol,
            passes=False,
            applicable=False,
            details={"reason": "no mapped nodes inside the grid"},
        )
    raw, label, matrix, count = best
    unitarity = float(np.abs(matrix.conj().T @ matrix - np.eye(3)).max())
    reference_distance = float(np.abs(matrix - reference).max())
    residual = raw / patch.scale
    logger.info("rho_fitted: residual %.3e, unitarity %.3e", residual, unitarity)
    return SymmetryReport(
        relation="rho_fitted",
        residual=residual,
        tolerance=tol,
        passes=residual <= tol and unitarity <= REFERENCE_TOLERANCE,
        orientation=label,
        details={
            "raw_residual": raw,
            "nodes": count,
            "unitarity_error": unitarity,
            "distance_to_R_diag_1_i_i": reference_distance,
        },
    )


def d4_d8_test(patch: SurfacePatch, tol: float = 1e-8) -> list[SymmetryReport]:
    """Test ``Λ f(w) = f(λ^{±1} w)``, ``T conj f(w) = f(conj w)`` and ``R f(w) = f(ρ^{±1} w)``.

    ``f`` is shifted so that ``f(0) = 0``. The literal ``R`` relation is
    reported next to a fitted complex matrix for the ``ρ`` rotation.
    """
    origin = vertex_value(patch)
    return [
        _identity_report(
            patch,
            "lambda",
            lambda f: f @ LAMBDA.T,
            {"lambda": _scaling(LAMBDA_DOMAIN), "lambda^-1": _scaling(1 / LAMBDA_DOMAIN)},
            tol,
            origin,
        ),
        _identity_report(patch, "tau", lambda f: np.conj(f) @ T.T, {"tau": tau}, tol, origin),
        _identity_report(
            patch,
            "rho_literal",
            lambda f: f @ R.T,
            {"rho": _scaling(RHO_DOMAIN), "rho^-1": _scaling(1 / RHO_DOMAIN)},
            tol,
            origin,
        ),
        _fitted_rho_report(patch, tol, origin),
    ]


@dataclass(frozen=True)
class SelfAdjointResult:
    """Fitted ``R X*(w) + b = X(ρ^{±1} w)`` and its comparison with the reference rotation."""

    report: SymmetryReport
    fit: RegistrationFit

    def as_record(self) -> dict[str, object]:
        return {
            **self.report.as_record(),
            "rotation": self.fit.rotation.tolist(),
            "translation": self.fit.translation.tolist(),
        }


def _reference_match(rotation: NDArray[np.float64]) -> tuple[str, float]:
    matches: list[tuple[float, str]] = []
    for name, element in dihedral_group().items():
        for power in (1, -1):
            candidate = element @ np.linalg.matrix_power(R_REAL, power)
            distance = float(np.abs(rotation - candidate).max())
            matches.append((distance, f"{name}·R^{power}"))
    distance, name = min(matches, key=lambda item: item[0])
    return name, distance


def self_adjoint_test(patch: SurfacePatch, tol: float = 1e-6) -> SelfAdjointResult:
    """Register ``X*`` at grid nodes onto ``X`` at the nodes rotated by ``ρ^{±1}``.

    Passes when the RMS residual is at most ``tol * scale`` and the fitted
    matrix is orthogonal. The fitted matrix is matched against the real form
    of ``R`` composed with ``±g``, ``g`` generated by ``Λ`` and ``T``.

    Raises:
        DegeneratePointSetError: If the sampled adjoint spans fewer than two dimensions.

    """
    adjoint_points = patch.x_star.reshape(-1, 3)
    fits: list[tuple[RegistrationFit, str, int]] = []
    for label, power in (("rho", 1), ("rho^-1", -1)):
        nodes = mapped_nodes(patch.grid, _scaling(RHO_DOMAIN**power))
        if nodes.count < MIN_NODES:
            continue
        target = surface_f(patch, nodes.images).real
        fits.append((fit_orthogonal(adjoint_points[nodes.indices], target), label, nodes.count))
    if not fits:
        raise DegeneratePointSetError(0)
    ranked = [(item[0].rms, item) for item in fits]
    _, (fit, label, count) = _first_best(ranked, TIE_SLACK * patch.scale)
    reference, distance = _reference_match(fit.rotation)
    residual = fit.rms / patch.scale
    passes = residual <= tol and fit.orthogonality_error <= ORTHOGONALITY_TOLERANCE
    logger.info(
        "self_adjoint: residual %.3e, closest reference %s (%.3e)", residual, reference, distance
    )
    report = SymmetryReport(
        relation="self_adjoint",
        residual=residual,
        tolerance=tol,
        passes=passes,
        orientation=label,
        details={
            "raw_residual": fit.rms,
            "nodes": count,
            "orthogonality_error": fit.orthogonality_error,
            "reference": reference,
            "reference_distance": distance,
            "matches_reference": distance <= REFERENCE_TOLERANCE,
        },
    )
    return SelfAdjointResult(report=report, fit=fit)


@dataclass(frozen=True)
class OrderCandidate:
    """Fit of ``X(e^{2πi/m} w) = A X(w) + b`` for one order ``m``."""

    order: int
    residual: float
    rotation: NDArray[np.float64] | None


@dataclass(frozen=True)
class DihedralSearchResult:
    """Orders whose domain rotation is realised by an orthogonal map of space.

    ``continuous`` is set only when every candidate order passes.
    ``expected_angle`` is the yz rotation of ``Λ_k`` when a family index was given.
    """

    candidates: tuple[OrderCandidate, ...]
    passing: tuple[int, ...]
    largest_order: int | None
    generator: NDArray[np.float64] | None
    generator_angle: float | None
    continuous: bool
    tolerance: float
    expected_angle: float | None = None
    agrees_with_family: bool | None = None

    def as_record(self) -> dict[str, object]:
        record: dict[str, object] = {
            "name": "dihedral_search",
            "pass": self.largest_order is not None,
            "tolerance": self.tolerance,
            "passing_orders": list(self.passing),
            "largest_order": self.largest_order,
            "continuous": self.continuous,
            "residuals": {str(item.order): item.residual for item in self.candidates},
        }
        if self.generator is not None:
            record["generator"] = self.generator.tolist()
            record["generator_angle"] = self.generator_angle
        if self.expected_angle is not None:
            record["expected_angle"] = self.expected_angle
            record["agrees_with_family"] = self.agrees_with_family
        return record


def _order_candidate(patch: SurfacePatch, order: int) -> OrderCandidate:
    mapping = _rotation_about(patch.grid.base_point, 2 * math.pi / order)
    nodes = mapped_nodes(patch.grid, mapping)
    if nodes.count < MIN_NODES:
        return OrderCandidate(order=order, residual=math.inf, rotation=None)
    source = patch.x.reshape(-1, 3)[nodes.indices]
    target = surface_f(patch, nodes.images).real
    try:
        fit = fit_orthogonal(source, target)
    except DegeneratePointSetError:
        return OrderCandidate(order=order, residual=math.inf, rotation=None)
    return OrderCandidate(order=order, residual=fit.rms / patch.scale, rotation=fit.rotation)


def dihedral_search(
    patch: SurfacePatch,
    max_order: int = 12,
    tol: float = 1e-6,
    family_k: int | None = None,
) -> DihedralSearchResult:
    """Fit an orthogonal generator for every domain rotation by ``2π/m``, ``2 <= m <= max_order``.

    Rotations are taken about the grid's base point. When ``family_k`` is
    given the detected generator's yz angle is compared with that of ``Λ_k``.
    """
    candidates = tuple(_order_candidate(patch, order) for order in range(2, max_order + 1))
    passing = tuple(item.order for item in candidates if item.residual <= tol)
    largest = max(passing) if passing else None
    generator = next((item.rotation for item in candidates if item.order == largest), None)
    angle = None if generator is None else yz_angle(generator)
    expected: float | None = None
    agrees: bool | None = None
    if family_k is not None:
        expected = yz_angle(weak_cpg_generator(family_k))
        agrees = (
            angle is not None
            and expected is not None
            and math.isclose(abs(angle), expected, abs_tol=REFERENCE_TOLERANCE)
        )
    continuous = bool(passing) and len(passing) == len(candidates)
    logger.info(
        "dihedral_search: passing orders %s, largest %s, continuous %s",
        passing,
        largest,
        continuous,
    )
    return DihedralSearchResult(
        candidates=candidates,
        passing=passing,
        largest_order=largest,
        generator=generator,
        generator_angle=angle,
        continuous=continuous,
        tolerance=tol,
        expected_angle=expected,
        agrees_with_family=agrees,
    )
