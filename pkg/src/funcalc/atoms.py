from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.core.errors import DimensionMismatch
from src.funcalc.functions import ComplexArray, Function2D, RealArray, broadcast_points

TWO_PI = 2.0 * math.pi
INTEGER_TOL = 1e-13


def fejer(t: ArrayLike) -> RealArray:
    """
    φ(t) = (1 − cos 2πt) / (2π² t²) = sinc²(t).

    Exactly 1 at t = 0 and exactly 0 at the other integers.
    """
    points = np.asarray(t, dtype=np.float64)
    values = np.sinc(points) ** 2
    nearest = np.round(points)
    on_integer = np.abs(points - nearest) <= INTEGER_TOL * np.maximum(1.0, np.abs(points))
    values = np.where(on_integer & (nearest != 0.0), 0.0, values)
    return np.where(on_integer & (nearest == 0.0), 1.0, values)


def fejer_derivative(t: ArrayLike) -> RealArray:
    points = np.asarray(t, dtype=np.float64)
    sinc = np.sinc(points)
    safe = np.where(points == 0.0, 1.0, points)
    sinc_prime = np.where(points == 0.0, 0.0, (np.cos(math.pi * points) - sinc) / safe)
    return 2.0 * sinc * sinc_prime


def fejer_transform(xi: ArrayLike) -> RealArray:
    """Fourier transform ∫ φ(t) e^{−iξt} dt = max(0, 1 − |ξ|/2π)."""
    return np.maximum(0.0, 1.0 - np.abs(np.asarray(xi, dtype=np.float64)) / TWO_PI)


class AtomFamily(ABC):
    """Indexed family of one-variable atoms u_a, evaluated as a (size, points) table."""

    @property
    @abstractmethod
    def size(self) -> int:
        pass

    @abstractmethod
    def values(self, t: ArrayLike) -> ComplexArray:
        pass

    @abstractmethod
    def derivatives(self, t: ArrayLike) -> ComplexArray:
        pass

    @property
    @abstractmethod
    def bandlimit(self) -> float:
        pass

    @abstractmethod
    def sup_norms(self) -> RealArray:
        pass

    def envelope_bound(self) -> float:
        """Upper bound for sup_t Σ_a |u_a(t)|."""
        return float(np.sum(self.sup_norms()))

    @abstractmethod
    def dilated(self, epsilon: float) -> AtomFamily:
        """Family of t ↦ u_a(t / ε)."""


@dataclass(frozen=True, eq=False)
class FejerFamily(AtomFamily):
    """u_a(t) = φ((t − centers[a]) / width)."""

    centers: RealArray
    width: float = 1.0

    @property
    def size(self) -> int:
        return int(self.centers.shape[0])

    def _offsets(self, t: ArrayLike) -> RealArray:
        points = np.asarray(t, dtype=np.float64).reshape(-1)
        return (points[None, :] - self.centers[:, None]) / self.width

    def values(self, t: ArrayLike) -> ComplexArray:
        return fejer(self._offsets(t)).astype(np.complex128)

    def derivatives(self, t: ArrayLike) -> ComplexArray:
        return (fejer_derivative(self._offsets(t)) / self.width).astype(np.complex128)

    def transforms(self, xi: ArrayLike) -> ComplexArray:
        """Fourier transforms of every atom on the frequencies ``xi``; shape (size, len(xi))."""
        freqs = np.asarray(xi, dtype=np.float64).reshape(-1)
        phase = np.exp(-1j * np.outer(self.centers, freqs))
        return self.width * phase * fejer_transform(self.width * freqs)[None, :]

    @property
    def bandlimit(self) -> float:
        return TWO_PI / self.width

    def sup_norms(self) -> RealArray:
        return np.ones(self.size)

    def envelope_bound(self) -> float:
        # Σ_k φ(t − k) = 1, so distinct lattice centers sum to at most 1
        lattice = self.centers / self.width
        on_lattice = np.all(np.abs(lattice - np.round(lattice)) <= INTEGER_TOL * np.maximum(1.0, np.abs(lattice)))
        if on_lattice and np.unique(np.round(lattice)).size == self.size:
            return min(1.0, float(self.size))
        return super().envelope_bound()

    def dilated(self, epsilon: float) -> FejerFamily:
        return FejerFamily(centers=self.centers * epsilon, width=self.width * epsilon)


@dataclass(frozen=True, eq=False)
class ExponentialFamily(AtomFamily):
    """u_a(t) = exp(i · harmonics[a] · base · t)."""

    harmonics: NDArray[np.int64]
    base: float = 1.0

    @property
    def size(self) -> int:
        return int(self.harmonics.shape[0])

    @property
    def frequencies(self) -> RealArray:
        return self.harmonics * self.base

    def values(self, t: ArrayLike) -> ComplexArray:
        points = np.asarray(t, dtype=np.float64).reshape(-1)
        return np.exp(1j * np.outer(self.frequencies, points))

    def derivatives(self, t: ArrayLike) -> ComplexArray:
        return 1j * self.frequencies[:, None] * self.values(t)

    @property
    def bandlimit(self) -> float:
        return float(np.max(np.abs(self.frequencies))) if self.size else 0.0

    def sup_norms(self) -> RealArray:
        return np.ones(self.size)

    def dilated(self, epsilon: float) -> ExponentialFamily:
        return ExponentialFamily(harmonics=self.harmonics, base=self.base / epsilon)


@dataclass(frozen=True, eq=False)
class BandLimited(Function2D):
    """
    f(x, y) = Σ_ab W_ab u_a(x) v_b(y) for closed-form atom families u, v.

    The Fourier support of each product sits in a box, so the bandlimit is the
    half-diagonal of the box spanned by the two families.
    """

    left: AtomFamily
    right: AtomFamily
    weights: ComplexArray

    def __post_init__(self) -> None:
        if self.weights.shape != (self.left.size, self.right.size):
            raise DimensionMismatch(
                f"weights must be {self.left.size}x{self.right.size}, got {self.weights.shape}"
            )

    @classmethod
    def build(cls, left: AtomFamily, right: AtomFamily, weights: ArrayLike) -> BandLimited:
        return cls(left=left, right=right, weights=np.asarray(weights, dtype=np.complex128))

    def _combine(self, u: ComplexArray, v: ComplexArray, shape: tuple[int, ...]) -> ComplexArray:
        return np.einsum("an,ab,bn->n", u, self.weights, v).reshape(shape)

    def evaluate(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        px, py = broadcast_points(x, y)
        return self._combine(self.left.values(px), self.right.values(py), px.shape)

    def evaluate_grid(self, xs: ArrayLike, ys: ArrayLike) -> ComplexArray:
        u = self.left.values(xs)
        v = self.right.values(ys)
        return u.T @ self.weights @ v

    def dx(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        px, py = broadcast_points(x, y)
        return self._combine(self.left.derivatives(px), self.right.values(py), px.shape)

    def dy(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        px, py = broadcast_points(x, y)
        return self._combine(self.left.values(px), self.right.derivatives(py), px.shape)

    @property
    def bandlimit(self) -> float | None:
        return math.hypot(self.left.bandlimit, self.right.bandlimit)

    def sup_bound(self) -> float | None:
        """The smaller of Σ|W_ab|·‖u_a‖·‖v_b‖ and max|W_ab| times both envelope bounds."""
        magnitudes = np.abs(self.weights) * np.outer(self.left.sup_norms(), self.right.sup_norms())
        if magnitudes.size == 0:
            return 0.0
        envelope = float(np.max(np.abs(self.weights))) * self.left.envelope_bound() * self.right.envelope_bound()
        return min(float(np.sum(magnitudes)), envelope)

    def rescaled(self, epsilon: float) -> BandLimited:
        """f_ε(x, y) = ε f(x / ε, y / ε)."""
        return BandLimited(
            left=self.left.dilated(epsilon),
            right=self.right.dilated(epsilon),
            weights=self.weights * epsilon,
        )

    def flipped(self) -> BandLimited:
        return BandLimited(left=self.right, right=self.left, weights=self.weights.T.copy())
