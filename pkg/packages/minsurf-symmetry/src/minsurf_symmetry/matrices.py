"""Dihedral matrices acting on space and the matching maps of the domain."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

SQRT_HALF = math.sqrt(0.5)

T: NDArray[np.float64] = np.diag([1.0, 1.0, -1.0])
LAMBDA: NDArray[np.float64] = np.array([[-1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]])
LAMBDA_SQUARED_T: NDArray[np.float64] = LAMBDA @ LAMBDA @ T
R: NDArray[np.complex128] = np.array(
    [[1j, 0.0, 0.0], [0.0, SQRT_HALF, -SQRT_HALF], [0.0, SQRT_HALF, SQRT_HALF]],
    dtype=np.complex128,
)
# Real form of R: identity on x, rotation by pi/4 on the yz block.
R_REAL: NDArray[np.float64] = np.array(
    [[1.0, 0.0, 0.0], [0.0, SQRT_HALF, -SQRT_HALF], [0.0, SQRT_HALF, SQRT_HALF]]
)
AXIS_ROTATION: NDArray[np.float64] = np.diag([-1.0, -1.0, 1.0])

LAMBDA_DOMAIN = 1j
RHO_DOMAIN = complex(SQRT_HALF, SQRT_HALF)


def tau(w: ArrayLike) -> NDArray[np.complex128]:
    return np.conj(np.asarray(w, dtype=np.complex128))


def lam(w: ArrayLike, power: int = 1) -> NDArray[np.complex128]:
    return LAMBDA_DOMAIN**power * np.asarray(w, dtype=np.complex128)


def rho(w: ArrayLike, power: int = 1) -> NDArray[np.complex128]:
    return RHO_DOMAIN**power * np.asarray(w, dtype=np.complex128)


def yz_rotation(angle: float, x_sign: float = 1.0) -> NDArray[np.float64]:
    """``diag(x_sign, rot(angle))`` with the rotation acting on the yz block."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[x_sign, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def weak_cpg_generator(k: int) -> NDArray[np.float64]:
    """``Λ_k``: x-flip composed with a yz rotation by ``pi / (2n)``, ``n = 2k + 2``.

    Raises:
        ValueError: If ``k < 1``.

    """
    if k < 1:
        msg = f"k must be at least 1, got {k}"
        raise ValueError(msg)
    n = 2 * k + 2
    return yz_rotation(math.pi / (2 * n), x_sign=-1.0)


def dihedral_group() -> dict[str, NDArray[np.float64]]:
    """The sixteen matrices ``±g`` for ``g`` in the group generated by ``Λ`` and ``T``."""
    elements: dict[str, NDArray[np.float64]] = {}
    for power in range(4):
        rotation = np.linalg.matrix_power(LAMBDA, power)
        for flip, flip_name in ((np.eye(3), ""), (T, "T")):
            base = rotation @ flip
            name = f"Λ^{power}{flip_name}" if power else (flip_name or "Id")
            elements[name] = base
            elements[f"-{name}"] = -base
    return elements


def yz_angle(matrix: ArrayLike) -> float | None:
    """Rotation angle of the yz block when ``matrix`` preserves the x-axis, else None."""
    a = np.asarray(matrix, dtype=float)
    if np.abs(a[0, 1:]).max() > 1e-6 or np.abs(a[1:, 0]).max() > 1e-6:  # noqa: PLR2004
        return None
    block = a[1:, 1:]
    if np.linalg.det(block) < 0:
        return None
    return math.atan2(block[1, 0], block[0, 0])
