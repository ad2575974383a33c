from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.divdiff.divided import divided_diff_1
from src.divdiff.hilbert import hilbert_matvec
from src.funcalc.functions import ComplexArray, Function2D, RealArray

NODE_TOL = 1e-13


@dataclass(frozen=True, eq=False)
class SincGrid:
    """Interpolation nodes jπ/σ for |j| ≤ J."""

    radius: int
    sigma: float = 1.0

    def __post_init__(self) -> None:
        if self.radius < 0:
            raise ValueError(f"truncation radius must be nonnegative, got {self.radius}")
        if self.sigma <= 0.0:
            raise ValueError(f"sigma must be positive, got {self.sigma}")

    @property
    def indices(self) -> NDArray[np.int64]:
        return np.arange(-self.radius, self.radius + 1, dtype=np.int64)

    @property
    def nodes(self) -> RealArray:
        return self.indices * (math.pi / self.sigma)

    @property
    def size(self) -> int:
        return 2 * self.radius + 1

    def covers(self, points: ArrayLike, margin: float = 0.0) -> bool:
        extent = float(np.max(np.abs(np.asarray(points, dtype=np.float64)), initial=0.0))
        return extent + margin <= self.radius * math.pi / self.sigma

    @classmethod
    def covering(cls, points: ArrayLike, sigma: float, margin_pi: float) -> SincGrid:
        """Smallest grid whose window contains ``points`` inflated by margin_pi·π/σ."""
        extent = float(np.max(np.abs(np.asarray(points, dtype=np.float64)), initial=0.0))
        radius = math.ceil(extent * sigma / math.pi + margin_pi)
        return cls(radius=radius, sigma=sigma)


def sinc_weights(x: float | ArrayLike, J: int) -> RealArray:
    """
    w_j(x) = sin(x − jπ) / (x − jπ) for j = −J..J.

    Scalar x gives shape (2J+1,); an array of points gives (len(x), 2J+1).
    Nodes are snapped so w_j(jπ) = 1 and w_k(jπ) = 0 exactly.
    """
    points = np.asarray(x, dtype=np.float64)
    offsets = points[..., None] / math.pi - np.arange(-J, J + 1, dtype=np.float64)
    weights = np.sinc(offsets)
    nearest = np.round(offsets)
    on_node = np.abs(offsets - nearest) <= NODE_TOL * np.maximum(1.0, np.abs(points[..., None]))
    weights = np.where(on_node, np.where(nearest == 0.0, 1.0, 0.0), weights)
    return np.asarray(weights, dtype=np.float64)


def sinc_tail_bound(x: float, J: int) -> float:
    """Upper bound for 1 − Σ_{|j|≤J} w_j(x)² when |x| < Jπ."""
    slack = J - abs(x) / math.pi
    if slack <= 0.0:
        return math.inf
    return 2.0 / (math.pi**2 * slack)


@dataclass(frozen=True, eq=False)
class DividedDiffMatrix:
    """Matrix {𝔇^[1]f(x_j, x_k, y)} over the nodes of a sinc grid; diagonal ∂f/∂x."""

    y: float
    grid: SincGrid
    entries: ComplexArray
    samples: ComplexArray
    derivatives: ComplexArray

    @property
    def off_diagonal(self) -> ComplexArray:
        return self.entries - np.diag(np.diag(self.entries))

    def norm(self) -> float:
        return float(np.linalg.norm(self.entries, 2))


def divdiff_matrix(f: Function2D, y: float, J: int, sigma: float = 1.0) -> DividedDiffMatrix:
    grid = SincGrid(radius=J, sigma=sigma)
    nodes = grid.nodes
    samples = f.evaluate(nodes, np.full_like(nodes, y))
    derivatives = f.dx(nodes, np.full_like(nodes, y))
    entries = divided_diff_1(f, nodes[:, None], nodes[None, :], np.full((1, 1), y))
    return DividedDiffMatrix(y=float(y), grid=grid, entries=entries, samples=samples, derivatives=derivatives)


def divdiff_tables(f: Function2D, ys: ArrayLike, grid: SincGrid) -> ComplexArray:
    """Stack of divided-difference matrices over the grid nodes, one per y; shape (len(ys), n, n)."""
    nodes = grid.nodes
    y = np.asarray(ys, dtype=np.float64).reshape(-1)
    return divided_diff_1(f, nodes[None, :, None], nodes[None, None, :], y[:, None, None])


def sinc_expand_D1(f: Function2D, x1: float, x2: float, y: float, J: int) -> complex:
    """
    Truncated sinc expansion Σ_{|j|,|k|≤J} w_j(x1) w_k(x2) 𝔇^[1]f(jπ, kπ, y).

    The divided-difference matrix is never formed: its off-diagonal part is
    (M𝓗 − 𝓗M)/π for M = diag f(jπ, y), applied through an FFT Toeplitz product.
    """
    nodes = SincGrid(radius=J).nodes
    w1 = sinc_weights(x1, J)
    w2 = sinc_weights(x2, J)
    ys = np.full_like(nodes, y)
    samples = f.evaluate(nodes, ys)
    derivatives = f.dx(nodes, ys)

    commutator = (
        np.dot(w1 * samples, hilbert_matvec(w2)) + np.dot(hilbert_matvec(w1), samples * w2)
    ) / math.pi
    diagonal = np.sum(w1 * w2 * derivatives)
    return complex(commutator + diagonal)
