"""Björling strips and the Schwarz solution on rectangular domains."""

from minsurf_bjorling.curve import AnalyticCurve, Triple, evaluate_real, evaluate_vectors
from minsurf_bjorling.exceptions import (
    BjorlingError,
    DegenerateFrameError,
    DomainGridError,
    NonPlanarCurveError,
    NotPerpendicularSymmetricError,
    QuadratureError,
    StripError,
)
from minsurf_bjorling.geometry import (
    CurveGeometry,
    DomainPath,
    GeometryReport,
    curve_on_surface_geometry,
    laplacian_residual,
    minimality_report,
)
from minsurf_bjorling.grid import DomainGrid
from minsurf_bjorling.isotropic import IsotropicCurve, IsotropicValues
from minsurf_bjorling.patch import (
    SurfacePatch,
    adjoint_patch,
    evaluate_patch,
    path_independence_residual,
)
from minsurf_bjorling.quadrature import LineIntegral, integrate_line
from minsurf_bjorling.strip import (
    PlanarFrame,
    Strip,
    StripValidation,
    SymmetricCurveReport,
    check_perpendicular_symmetric,
    make_planar_strip,
    make_strip,
    transform_strip,
    validate_strip,
)

__all__ = [
    "AnalyticCurve",
    "BjorlingError",
    "CurveGeometry",
    "DegenerateFrameError",
    "DomainGrid",
    "DomainGridError",
    "DomainPath",
    "GeometryReport",
    "IsotropicCurve",
    "IsotropicValues",
    "LineIntegral",
    "NonPlanarCurveError",
    "NotPerpendicularSymmetricError",
    "PlanarFrame",
    "QuadratureError",
    "Strip",
    "StripError",
    "StripValidation",
    "SurfacePatch",
    "SymmetricCurveReport",
    "Triple",
    "adjoint_patch",
    "check_perpendicular_symmetric",
    "curve_on_surface_geometry",
    "evaluate_patch",
    "evaluate_real",
    "evaluate_vectors",
    "integrate_line",
    "laplacian_residual",
    "make_planar_strip",
    "make_strip",
    "minimality_report",
    "path_independence_residual",
    "transform_strip",
    "validate_strip",
]
