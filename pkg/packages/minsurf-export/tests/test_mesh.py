"""Tests for OBJ and PLY mesh export."""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
import pytest
from minsurf_export import (
    ExportDataError,
    ExportIOError,
    MeshFormat,
    export_mesh,
    grid_faces,
    obj_bytes,
    ply_bytes,
)

if TYPE_CHECKING:
    from pathlib import Path

    from minsurf_bjorling import SurfacePatch


def _lines(data: bytes, prefix: str) -> list[str]:
    return [line for line in data.decode("ascii").splitlines() if line.startswith(prefix)]


class TestGridFaces:
    def test_single_cell(self) -> None:
        assert grid_faces(2, 2).tolist() == [[0, 2, 3], [0, 3, 1]]

    def test_face_count(self) -> None:
        assert grid_faces(101, 101).shape == (20000, 3)

    def test_counterclockwise_about_surface_normal(self, plane_patch: SurfacePatch) -> None:
        vertices = plane_patch.x.reshape(-1, 3)
        faces = grid_faces(plane_patch.grid.nu, plane_patch.grid.nv)
        a, b, c = (vertices[faces[:, k]] for k in range(3))
        face_normals = np.cross(b - a, c - a)
        assert (face_normals[:, 2] > 0).all()
        np.testing.assert_allclose(plane_patch.normal[..., 2], 1.0, atol=1e-12)


class TestObj:
    def test_counts(self, plane_patch: SurfacePatch) -> None:
        data = obj_bytes(plane_patch)
        assert len(_lines(data, "v ")) == 77
        assert len(_lines(data, "vn ")) == 77
        assert len(_lines(data, "f ")) == 2 * 10 * 6

    def test_tiny_patch(self, tiny_patch: SurfacePatch) -> None:
        data = obj_bytes(tiny_patch)
        vertices = [[float(token) for token in line.split()[1:]] for line in _lines(data, "v ")]
        np.testing.assert_allclose(vertices, [[-1, -1, 0], [-1, 1, 0], [1, -1, 0], [1, 1, 0]])
        assert _lines(data, "f ") == ["f 1//1 3//3 4//4", "f 1//1 4//4 2//2"]

    def test_without_normals(self, tiny_patch: SurfacePatch) -> None:
        data = obj_bytes(tiny_patch, normals=False)
        assert _lines(data, "vn ") == []
        assert _lines(data, "f ") == ["f 1 3 4", "f 1 4 2"]

    def test_nine_significant_digits(self, plane_patch: SurfacePatch) -> None:
        tokens = _lines(obj_bytes(plane_patch), "v ")[1].split()
        assert tokens[2] == f"{-2.0 / 3.0:.9g}"

    def test_singular_nodes_have_no_normal(self, branched_patch: SurfacePatch) -> None:
        assert branched_patch.singular_mask[1, 1]
        data = obj_bytes(branched_patch)
        assert len(_lines(data, "vn ")) == 8
        assert all("//" not in line for line in _lines(data, "f "))


class TestPly:
    def test_header_and_payload(self, tiny_patch: SurfacePatch) -> None:
        data = ply_bytes(tiny_patch)
        header, _, body = data.partition(b"end_header\n")
        assert b"format binary_little_endian 1.0" in header
        assert b"element vertex 4" in header
        assert b"element face 2" in header
        vertices = np.frombuffer(body[: 4 * 48], dtype="<f8").reshape(4, 6)
        np.testing.assert_allclose(vertices[:, :3], tiny_patch.x.reshape(-1, 3))
        np.testing.assert_allclose(vertices[:, 5], 1.0)
        faces = np.frombuffer(body[4 * 48 :], dtype=[("n", "u1"), ("i", "<i4", (3,))])
        assert faces["n"].tolist() == [3, 3]
        assert faces["i"].tolist() == [[0, 2, 3], [0, 3, 1]]

    def test_singular_normals_are_zero(self, branched_patch: SurfacePatch) -> None:
        body = ply_bytes(branched_patch).partition(b"end_header\n")[2]
        vertices = np.frombuffer(body[: 9 * 48], dtype="<f8").reshape(9, 6)
        np.testing.assert_array_equal(vertices[4, 3:], 0.0)
        assert np.isfinite(vertices).all()


class TestExportMesh:
    @pytest.mark.parametrize("fmt", ["obj", "ply"])
    def test_reexport_is_byte_identical(
        self, plane_patch: SurfacePatch, tmp_path: Path, fmt: str
    ) -> None:
        first, second = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
        export_mesh(plane_patch, first, fmt)
        export_mesh(plane_patch, second, fmt)
        assert first.read_bytes() == second.read_bytes()

    def test_summary(self, tiny_patch: SurfacePatch, tmp_path: Path) -> None:
        summary = export_mesh(tiny_patch, tmp_path / "out" / "tiny.ply", MeshFormat.PLY)
        assert (summary.vertices, summary.faces) == (4, 2)
        assert summary.format is MeshFormat.PLY
        assert summary.path.exists()
        assert list(summary.path.parent.iterdir()) == [summary.path]

    def test_unknown_format(self, tiny_patch: SurfacePatch, tmp_path: Path) -> None:
        with pytest.raises(ExportDataError, match="stl"):
            export_mesh(tiny_patch, tmp_path / "mesh.stl", "stl")

    def test_unwritable_target(self, tiny_patch: SurfacePatch, tmp_path: Path) -> None:
        blocker = tmp_path / "file"
        blocker.write_text("x")
        with pytest.raises(ExportIOError) as exc_info:
            export_mesh(tiny_patch, blocker / "mesh.obj")
        assert isinstance(exc_info.value.__cause__, OSError)
