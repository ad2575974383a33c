from __future__ import annotations

import numpy as np
from scipy.stats import unitary_group

from src.matcore.dense import DenseMatrix, adjoint


def random_matrix(rows: int, cols: int, rng: np.random.Generator) -> DenseMatrix:
    """Complex Gaussian matrix with unit-variance entries."""
    real = rng.standard_normal((rows, cols))
    imag = rng.standard_normal((rows, cols))
    return ((real + 1j * imag) / np.sqrt(2.0)).astype(np.complex128)


def random_unitary(dim: int, rng: np.random.Generator) -> DenseMatrix:
    """Haar-distributed unitary."""
    if dim == 1:
        return np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size=(1, 1))).astype(np.complex128)
    return np.asarray(unitary_group.rvs(dim, random_state=rng), dtype=np.complex128)


def random_hermitian(dim: int, rng: np.random.Generator) -> DenseMatrix:
    """GUE-like Hermitian matrix."""
    g = random_matrix(dim, dim, rng)
    return (g + adjoint(g)) / 2.0


def random_hermitian_with_spectrum(
    dim: int,
    rng: np.random.Generator,
    low: float = -np.pi,
    high: float = np.pi,
) -> DenseMatrix:
    """Hermitian matrix with eigenvalues uniform in [low, high] and Haar eigenvectors."""
    eigenvalues = rng.uniform(low, high, size=dim)
    frame = random_unitary(dim, rng)
    hermitian = (frame * eigenvalues) @ adjoint(frame)
    return (hermitian + adjoint(hermitian)) / 2.0


def perturb_hermitian(
    matrix: DenseMatrix,
    rng: np.random.Generator,
    scale: float,
) -> DenseMatrix:
    """matrix + scale·H with H Hermitian of unit operator norm."""
    direction = random_hermitian(matrix.shape[0], rng)
    direction /= max(float(np.linalg.norm(direction, 2)), np.finfo(float).tiny)
    return matrix + scale * direction


def perturb_unitary(
    matrix: DenseMatrix,
    rng: np.random.Generator,
    angle: float,
) -> DenseMatrix:
    """matrix · exp(i·angle·H) with H Hermitian of unit operator norm."""
    direction = random_hermitian(matrix.shape[0], rng)
    direction /= max(float(np.linalg.norm(direction, 2)), np.finfo(float).tiny)
    eigenvalues, frame = np.linalg.eigh(direction)
    rotation = (frame * np.exp(1j * angle * eigenvalues)) @ adjoint(frame)
    return matrix @ rotation
