from __future__ import annotations

import math

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh

from src.core.errors import DimensionMismatch, NoConvergence
from src.funcalc.functions import ComplexArray, RealArray
from src.utils.logging import get_logger

logger = get_logger(__name__)


def _hilbert_symbol(n: int) -> tuple[RealArray, RealArray]:
    """First column and first row of the n×n matrix 1/(j − k), zero diagonal."""
    offsets = np.arange(1, n, dtype=np.float64)
    column = np.concatenate([[0.0], 1.0 / offsets])
    row = np.concatenate([[0.0], -1.0 / offsets])
    return column, row


def hilbert_matrix(n: int) -> RealArray:
    column, row = _hilbert_symbol(n)
    return np.asarray(scipy.linalg.toeplitz(column, row), dtype=np.float64)


def hilbert_matvec(vector: ArrayLike) -> ComplexArray:
    """𝓗_d v for the truncated discrete Hilbert matrix, via circulant embedding."""
    v = np.asarray(vector)
    n = v.shape[0]
    if n == 1:
        return np.zeros_like(v, dtype=np.complex128)
    column, row = _hilbert_symbol(n)
    return np.asarray(scipy.linalg.matmul_toeplitz((column, row), v), dtype=np.complex128)


def hilbert_norm(n: int, tol: float = 1e-10) -> float:
    """
    Operator norm of the n×n truncation of 𝓗_d.

    𝓗_d is real skew-symmetric, so its norm is the square root of the top
    eigenvalue of −𝓗_d², found matrix-free.
    """
    if n < 2:
        return 0.0
    column, row = _hilbert_symbol(n)

    def gram(v: RealArray) -> RealArray:
        once = scipy.linalg.matmul_toeplitz((column, row), v)
        return -np.real(scipy.linalg.matmul_toeplitz((column, row), once))

    operator = LinearOperator((n, n), matvec=gram, dtype=np.float64)
    try:
        eigenvalues = eigsh(operator, k=1, which="LA", tol=tol, return_eigenvectors=False)
    except ArpackNoConvergence as exc:
        raise NoConvergence(f"Lanczos iteration did not converge for n={n}") from exc
    norm = math.sqrt(max(float(eigenvalues[0]), 0.0))
    logger.debug(f"Truncated discrete Hilbert transform: n={n}, norm={norm:.12f}")
    return norm


def hilbert_commutator_split(
    samples: ArrayLike, derivatives: ArrayLike, J: int
) -> tuple[ComplexArray, ComplexArray]:
    """
    Split the divided-difference matrix at nodes jπ into C + D.

    C = (M𝓗_d − 𝓗_d M)/π carries the off-diagonal quotients, D = diag(∂f/∂x).
    """
    values = np.asarray(samples, dtype=np.complex128).reshape(-1)
    slopes = np.asarray(derivatives, dtype=np.complex128).reshape(-1)
    size = 2 * J + 1
    if values.shape != (size,) or slopes.shape != (size,):
        raise DimensionMismatch(f"expected {size} samples and derivatives for J={J}")
    hilbert = hilbert_matrix(size)
    commutator = (values[:, None] * hilbert - hilbert * values[None, :]) / math.pi
    return commutator, np.diag(slopes)
