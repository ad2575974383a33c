from __future__ import annotations

from typing import TypeAlias

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.core.errors import DimensionMismatch, NonFiniteEntries

DenseMatrix: TypeAlias = NDArray[np.complex128]


def as_dense(data: ArrayLike) -> DenseMatrix:
    matrix = np.array(data, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] == 0 or matrix.shape[1] == 0:
        raise DimensionMismatch(f"expected a nonempty 2-D matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise NonFiniteEntries("matrix has non-finite entries")
    return matrix


def require_square(matrix: DenseMatrix, name: str = "matrix") -> int:
    rows, cols = matrix.shape
    if rows != cols:
        raise DimensionMismatch(f"{name} must be square, got {rows}x{cols}")
    return rows


def adjoint(matrix: NDArray[np.complex128]) -> NDArray[np.complex128]:
    return np.conj(np.swapaxes(matrix, -1, -2))


def frobenius(matrix: NDArray[np.complex128]) -> float:
    return float(np.linalg.norm(matrix))


def is_hermitian(matrix: DenseMatrix, tol: float) -> bool:
    return frobenius(matrix - adjoint(matrix)) <= tol


def is_unitary(matrix: DenseMatrix, tol: float) -> bool:
    identity = np.eye(matrix.shape[0], dtype=np.complex128)
    return frobenius(adjoint(matrix) @ matrix - identity) <= tol


def matrix_unit(rows: int, cols: int, row: int, col: int) -> DenseMatrix:
    unit = np.zeros((rows, cols), dtype=np.complex128)
    unit[row, col] = 1.0
    return unit
