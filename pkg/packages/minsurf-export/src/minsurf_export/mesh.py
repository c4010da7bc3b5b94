"""OBJ and binary PLY meshes of a surface patch."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import TYPE_CHECKING

import numpy as np
from minsurf_logging import get_logger

from minsurf_export.atomic import write_atomic
from minsurf_export.exceptions import ExportDataError

if TYPE_CHECKING:
    from pathlib import Path

    from minsurf_bjorling import SurfacePatch
    from numpy.typing import NDArray

logger = get_logger("export.mesh")

PLY_VERTEX = np.dtype([("x", "<f8"), ("y", "<f8"), ("z", "<f8")])
PLY_VERTEX_NORMAL = np.dtype(
    [("x", "<f8"), ("y", "<f8"), ("z", "<f8"), ("nx", "<f8"), ("ny", "<f8"), ("nz", "<f8")]
)
PLY_FACE = np.dtype([("count", "u1"), ("indices", "<i4", (3,))])


class MeshFormat(StrEnum):
    OBJ = "obj"
    PLY = "ply"


@dataclass(frozen=True)
class MeshSummary:
    path: Path
    format: MeshFormat
    vertices: int
    faces: int
    singular_vertices: int


def grid_faces(nu: int, nv: int) -> NDArray[np.int64]:
    """Zero-based triangles, two per cell, counterclockwise seen from ``X_u x X_v``.

    Cell ``(i, j)`` gives ``(i,j) (i+1,j) (i+1,j+1)`` then ``(i,j) (i+1,j+1) (i,j+1)``.
    """
    index = np.arange(nu * nv, dtype=np.int64).reshape(nu, nv)
    a, b = index[:-1, :-1], index[1:, :-1]
    c, d = index[1:, 1:], index[:-1, 1:]
    cells = np.stack([np.stack([a, b, c], axis=-1), np.stack([a, c, d], axis=-1)], axis=2)
    return cells.reshape(-1, 3)


def _vertices(patch: SurfacePatch) -> NDArray[np.float64]:
    vertices = patch.x.reshape(-1, 3)
    if not np.isfinite(vertices).all():
        msg = "patch contains non-finite vertices"
        raise ExportDataError(msg)
    return vertices


def obj_bytes(patch: SurfacePatch, *, normals: bool = True) -> bytes:
    """Serialize ``patch`` as Wavefront OBJ text."""
    vertices = _vertices(patch)
    lines = [f"# minsurf patch {patch.grid.nu}x{patch.grid.nv}"]
    lines.extend(f"v {x:.9g} {y:.9g} {z:.9g}" for x, y, z in vertices)

    normal_ids: list[int | None] = [None] * len(vertices)
    if normals:
        singular = patch.singular_mask.reshape(-1)
        written = 0
        for vertex, normal in enumerate(patch.normal.reshape(-1, 3)):
            if singular[vertex]:
                continue
            written += 1
            lines.append(f"vn {normal[0]:.9g} {normal[1]:.9g} {normal[2]:.9g}")
            normal_ids[vertex] = written

    for face in grid_faces(patch.grid.nu, patch.grid.nv).tolist():
        ids = [normal_ids[vertex] for vertex in face]
        if all(item is not None for item in ids):
            tokens = [f"{vertex + 1}//{item}" for vertex, item in zip(face, ids, strict=True)]
        else:
            tokens = [str(vertex + 1) for vertex in face]
        lines.append("f " + " ".join(tokens))
    return ("\n".join(lines) + "\n").encode("ascii")


def ply_bytes(patch: SurfacePatch, *, normals: bool = True) -> bytes:
    """Serialize ``patch`` as binary little-endian PLY; singular normals become zero."""
    vertices = _vertices(patch)
    faces = grid_faces(patch.grid.nu, patch.grid.nv)
    properties = ["property double x", "property double y", "property double z"]
    if normals:
        properties += ["property double nx", "property double ny", "property double nz"]
        records = np.zeros(len(vertices), dtype=PLY_VERTEX_NORMAL)
        normal = np.where(patch.singular_mask[..., None], 0.0, patch.normal).reshape(-1, 3)
        records["nx"], records["ny"], records["nz"] = normal.T
    else:
        records = np.zeros(len(vertices), dtype=PLY_VERTEX)
    records["x"], records["y"], records["z"] = vertices.T

    face_records = np.zeros(len(faces), dtype=PLY_FACE)
    face_records["count"] = 3
    face_records["indices"] = faces
    header = "\n".join(
        [
            "ply",
            "format binary_little_endian 1.0",
            "comment minsurf patch",
            f"element vertex {len(vertices)}",
            *properties,
            f"element face {len(faces)}",
            "property list uchar int vertex_indices",
            "end_header",
        ]
    )
    return (header + "\n").encode("ascii") + records.tobytes() + face_records.tobytes()


WRITERS = {MeshFormat.OBJ: obj_bytes, MeshFormat.PLY: ply_bytes}


def export_mesh(
    patch: SurfacePatch,
    path: Path,
    mesh_format: MeshFormat | str = MeshFormat.OBJ,
    *,
    normals: bool = True,
) -> MeshSummary:
    """Write ``patch`` to ``path`` atomically.

    Raises:
        ExportDataError: If the format is unknown or the patch has non-finite vertices.
        ExportIOError: If the file cannot be written.

    """
    try:
        fmt = MeshFormat(mesh_format)
    except ValueError as exc:
        msg = f"Unsupported mesh format: {mesh_format}"
        raise ExportDataError(msg, cause=exc, format=str(mesh_format)) from exc

    data = WRITERS[fmt](patch, normals=normals)
    singular = int(patch.singular_mask.sum())
    if singular:
        logger.warning("%d singular vertices exported without normals", singular)
    write_atomic(path, data)
    nu, nv = patch.grid.nu, patch.grid.nv
    return MeshSummary(
        path=path,
        format=fmt,
        vertices=nu * nv,
        faces=2 * (nu - 1) * (nv - 1),
        singular_vertices=singular,
    )
