"""Symmetry tests, registration and self-CPG search for Björling patches."""

from minsurf_symmetry.congruence import congruence_test
from minsurf_symmetry.cpg import (
    CpgExtraction,
    adjoint_cpg_test,
    diagonal_line_test,
    extract_cpg,
    self_cpg_test,
)
from minsurf_symmetry.dihedral import (
    DihedralSearchResult,
    OrderCandidate,
    SelfAdjointResult,
    d4_d8_test,
    dihedral_search,
    self_adjoint_test,
)
from minsurf_symmetry.exceptions import (
    CpgPlanarityError,
    DegeneratePointSetError,
    DomainOverlapError,
    GridSymmetryError,
    SearchError,
    SymmetryError,
)
from minsurf_symmetry.matrices import (
    AXIS_ROTATION,
    LAMBDA,
    LAMBDA_DOMAIN,
    R,
    R_REAL,
    RHO_DOMAIN,
    T,
    dihedral_group,
    lam,
    rho,
    tau,
    weak_cpg_generator,
    yz_angle,
    yz_rotation,
)
from minsurf_symmetry.reflections import axis_rotation_check, reflection_checks, straight_arc_test
from minsurf_symmetry.registration import RegistrationFit, fit_orthogonal
from minsurf_symmetry.reports import CongruenceResult, SymmetryReport
from minsurf_symmetry.search import CurveFamily, SearchResult, self_cpg_objective, self_cpg_search

__all__ = [
    "AXIS_ROTATION",
    "LAMBDA",
    "LAMBDA_DOMAIN",
    "RHO_DOMAIN",
    "R_REAL",
    "CongruenceResult",
    "CpgExtraction",
    "CpgPlanarityError",
    "CurveFamily",
    "DegeneratePointSetError",
    "DihedralSearchResult",
    "DomainOverlapError",
    "GridSymmetryError",
    "OrderCandidate",
    "R",
    "RegistrationFit",
    "SearchError",
    "SearchResult",
    "SelfAdjointResult",
    "SymmetryError",
    "SymmetryReport",
    "T",
    "adjoint_cpg_test",
    "axis_rotation_check",
    "congruence_test",
    "d4_d8_test",
    "diagonal_line_test",
    "dihedral_group",
    "dihedral_search",
    "extract_cpg",
    "fit_orthogonal",
    "lam",
    "reflection_checks",
    "rho",
    "self_adjoint_test",
    "self_cpg_objective",
    "self_cpg_search",
    "straight_arc_test",
    "tau",
    "weak_cpg_generator",
    "yz_angle",
    "yz_rotation",
]
