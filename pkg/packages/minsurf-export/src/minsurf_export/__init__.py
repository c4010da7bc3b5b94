"""Mesh and report writers."""

from minsurf_export.atomic import write_atomic
from minsurf_export.exceptions import ExportDataError, ExportError, ExportIOError
from minsurf_export.mesh import (
    MeshFormat,
    MeshSummary,
    export_mesh,
    grid_faces,
    obj_bytes,
    ply_bytes,
)
from minsurf_export.report import (
    REPORT_FORMAT_VERSION,
    CheckRecord,
    ReportDocument,
    build_report,
    input_digest,
    tool_version,
    write_report,
)

__all__ = [
    "REPORT_FORMAT_VERSION",
    "CheckRecord",
    "ExportDataError",
    "ExportError",
    "ExportIOError",
    "MeshFormat",
    "MeshSummary",
    "ReportDocument",
    "build_report",
    "export_mesh",
    "grid_faces",
    "input_digest",
    "obj_bytes",
    "ply_bytes",
    "tool_version",
    "write_atomic",
    "write_report",
]
