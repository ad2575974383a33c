from __future__ import annotations

import math
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from src.core.errors import DimensionMismatch, MissingDerivative, NotTorusFunction
from src.utils.logging import get_logger

logger = get_logger(__name__)

TWO_PI = 2.0 * math.pi
TORUS_PERIOD_TOL = 1e-12

# central-difference step scale, cbrt(machine epsilon)
FD_STEP_SCALE = float(np.cbrt(np.finfo(np.float64).eps))

ComplexArray = NDArray[np.complex128]
RealArray = NDArray[np.float64]
Vectorized2D = Callable[[RealArray, RealArray], ArrayLike]
Vectorized1D = Callable[[RealArray], ArrayLike]


def broadcast_points(*values: ArrayLike) -> list[RealArray]:
    return [np.asarray(v, dtype=np.float64) for v in np.broadcast_arrays(*values)]


def _central_difference_1d(func: Vectorized1D, x: RealArray) -> ComplexArray:
    step = FD_STEP_SCALE * (1.0 + np.abs(x))
    forward = np.asarray(func(x + step), dtype=np.complex128)
    backward = np.asarray(func(x - step), dtype=np.complex128)
    return (forward - backward) / (2.0 * step)


class Function1D(ABC):
    """Scalar function of one real variable, evaluated elementwise on arrays."""

    @abstractmethod
    def evaluate(self, x: ArrayLike) -> ComplexArray:
        pass

    @abstractmethod
    def derivative(self, x: ArrayLike) -> ComplexArray:
        pass

    @property
    def bandlimit(self) -> float | None:
        return None

    def sup_bound(self) -> float | None:
        return None

    def __call__(self, x: ArrayLike) -> ComplexArray:
        return self.evaluate(x)


class Function2D(ABC):
    """
    Scalar function of two real variables.

    ``bandlimit``, when known, is the radius of a disc containing the Fourier support;
    ``sup_bound`` is an upper bound for the sup-norm on the plane.
    """

    @abstractmethod
    def evaluate(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        pass

    @abstractmethod
    def dx(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        pass

    @abstractmethod
    def dy(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        pass

    @property
    def bandlimit(self) -> float | None:
        return None

    def sup_bound(self) -> float | None:
        return None

    def evaluate_grid(self, xs: ArrayLike, ys: ArrayLike) -> ComplexArray:
        """Table f(xs[a], ys[b]) of shape (len(xs), len(ys))."""
        x = np.asarray(xs, dtype=np.float64).reshape(-1)
        y = np.asarray(ys, dtype=np.float64).reshape(-1)
        return self.evaluate(x[:, None], y[None, :])

    def flipped(self) -> Function2D:
        """g(y, x) = f(x, y)."""
        return FlippedFunction(self)

    def __call__(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        return self.evaluate(x, y)


@dataclass(frozen=True, eq=False)
class FlippedFunction(Function2D):
    inner: Function2D

    def evaluate(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        return self.inner.evaluate(y, x)

    def dx(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        return self.inner.dy(y, x)

    def dy(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        return self.inner.dx(y, x)

    @property
    def bandlimit(self) -> float | None:
        return self.inner.bandlimit

    def sup_bound(self) -> float | None:
        return self.inner.sup_bound()

    def flipped(self) -> Function2D:
        return self.inner


@dataclass(frozen=True, eq=False)
class TrigPoly1D(Function1D):
    """Σ c_j exp(2πi j x / period)."""

    freqs: NDArray[np.int64]
    coeffs: ComplexArray
    period: float = TWO_PI

    @classmethod
    def from_terms(cls, terms: Mapping[int, complex], period: float = TWO_PI) -> TrigPoly1D:
        freqs = np.fromiter((int(j) for j in terms), dtype=np.int64, count=len(terms))
        coeffs = np.fromiter((complex(c) for c in terms.values()), dtype=np.complex128, count=len(terms))
        return cls.build(freqs, coeffs, period)

    @classmethod
    def build(cls, freqs: ArrayLike, coeffs: ArrayLike, period: float = TWO_PI) -> TrigPoly1D:
        freq_array = np.asarray(freqs, dtype=np.int64).reshape(-1)
        coeff_array = np.asarray(coeffs, dtype=np.complex128).reshape(-1)
        if freq_array.shape != coeff_array.shape:
            raise DimensionMismatch("one coefficient per frequency is required")
        if period <= 0.0:
            raise ValueError(f"period must be positive, got {period}")
        unique, inverse = np.unique(freq_array, return_inverse=True)
        merged = np.zeros(unique.shape, dtype=np.complex128)
        np.add.at(merged, inverse, coeff_array)
        return cls(freqs=unique, coeffs=merged, period=float(period))

    @classmethod
    def constant(cls, value: complex, period: float = TWO_PI) -> TrigPoly1D:
        return cls.build([0], [value], period)

    @property
    def degree(self) -> int:
        return int(np.max(np.abs(self.freqs))) if self.freqs.size else 0

    @property
    def angular_freqs(self) -> RealArray:
        return TWO_PI * self.freqs / self.period

    @property
    def bandlimit(self) -> float | None:
        return float(np.max(np.abs(self.angular_freqs))) if self.freqs.size else 0.0

    def sup_bound(self) -> float | None:
        return float(np.sum(np.abs(self.coeffs)))

    def evaluate(self, x: ArrayLike) -> ComplexArray:
        points = np.asarray(x, dtype=np.float64)
        phases = np.exp(1j * points[..., None] * self.angular_freqs)
        return np.asarray(phases @ self.coeffs, dtype=np.complex128)

    def derivative(self, x: ArrayLike) -> ComplexArray:
        return self.differentiated().evaluate(x)

    def differentiated(self) -> TrigPoly1D:
        return TrigPoly1D(self.freqs, self.coeffs * 1j * self.angular_freqs, self.period)

    def with_coeffs(self, coeffs: ArrayLike) -> TrigPoly1D:
        return TrigPoly1D(self.freqs, np.asarray(coeffs, dtype=np.complex128), self.period)

    def scaled(self, factor: complex) -> TrigPoly1D:
        return self.with_coeffs(self.coeffs * factor)


@dataclass(frozen=True, eq=False)
class CallableFunction1D(Function1D):
    func: Vectorized1D
    func_derivative: Vectorized1D | None = None
    band: float | None = None
    sup: float | None = None
    fd_fallback: bool = True

    def evaluate(self, x: ArrayLike) -> ComplexArray:
        return np.asarray(self.func(np.asarray(x, dtype=np.float64)), dtype=np.complex128)

    def derivative(self, x: ArrayLike) -> ComplexArray:
        points = np.asarray(x, dtype=np.float64)
        if self.func_derivative is not None:
            return np.asarray(self.func_derivative(points), dtype=np.complex128)
        if not self.fd_fallback:
            raise MissingDerivative("no derivative supplied and the finite-difference fallback is off")
        logger.warning("Derivative not supplied; using central differences")
        return _central_difference_1d(self.func, points)

    @property
    def bandlimit(self) -> float | None:
        return self.band

    def sup_bound(self) -> float | None:
        return self.sup


@dataclass(frozen=True, eq=False)
class TrigPoly(Function2D):
    """
    Trigonometric polynomial Σ c_m exp(2πi (j_m x / Lx + k_m y / Ly)).

    ``freqs`` is an (m, 2) integer array; duplicate frequencies are merged on build.
    """

    freqs: NDArray[np.int64]
    coeffs: ComplexArray
    periods: tuple[float, float] = (TWO_PI, TWO_PI)

    @classmethod
    def build(
        cls,
        freqs: ArrayLike,
        coeffs: ArrayLike,
        periods: Sequence[float] = (TWO_PI, TWO_PI),
    ) -> TrigPoly:
        freq_array = np.asarray(freqs, dtype=np.int64).reshape(-1, 2)
        coeff_array = np.asarray(coeffs, dtype=np.complex128).reshape(-1)
        if freq_array.shape[0] != coeff_array.shape[0]:
            raise DimensionMismatch("one coefficient per frequency pair is required")
        lx, ly = (float(periods[0]), float(periods[1]))
        if lx <= 0.0 or ly <= 0.0:
            raise ValueError(f"periods must be positive, got {periods}")
        if freq_array.shape[0] == 0:
            return cls(np.zeros((0, 2), dtype=np.int64), np.zeros(0, dtype=np.complex128), (lx, ly))
        unique, inverse = np.unique(freq_array, axis=0, return_inverse=True)
        merged = np.zeros(unique.shape[0], dtype=np.complex128)
        np.add.at(merged, inverse.reshape(-1), coeff_array)
        return cls(freqs=unique, coeffs=merged, periods=(lx, ly))

    @classmethod
    def from_terms(
        cls,
        terms: Mapping[tuple[int, int], complex],
        periods: Sequence[float] = (TWO_PI, TWO_PI),
    ) -> TrigPoly:
        freqs = [list(key) for key in terms]
        return cls.build(np.asarray(freqs, dtype=np.int64).reshape(-1, 2), list(terms.values()), periods)

    @classmethod
    def constant(cls, value: complex, periods: Sequence[float] = (TWO_PI, TWO_PI)) -> TrigPoly:
        return cls.build([[0, 0]], [value], periods)

    @property
    def is_torus(self) -> bool:
        return all(abs(period - TWO_PI) <= TORUS_PERIOD_TOL for period in self.periods)

    @property
    def degree_x(self) -> int:
        return int(np.max(np.abs(self.freqs[:, 0]))) if self.freqs.size else 0

    @property
    def degree_y(self) -> int:
        return int(np.max(np.abs(self.freqs[:, 1]))) if self.freqs.size else 0

    @property
    def angular_freqs(self) -> RealArray:
        scale = np.array([TWO_PI / self.periods[0], TWO_PI / self.periods[1]])
        return self.freqs * scale

    @property
    def bandlimit(self) -> float | None:
        if not self.freqs.size:
            return 0.0
        return float(np.max(np.linalg.norm(self.angular_freqs, axis=1)))

    def sup_bound(self) -> float | None:
        return float(np.sum(np.abs(self.coeffs)))

    def evaluate(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        px, py = broadcast_points(x, y)
        omega = self.angular_freqs
        phases = np.exp(1j * (px[..., None] * omega[:, 0] + py[..., None] * omega[:, 1]))
        return np.asarray(phases @ self.coeffs, dtype=np.complex128)

    def evaluate_grid(self, xs: ArrayLike, ys: ArrayLike) -> ComplexArray:
        x = np.asarray(xs, dtype=np.float64).reshape(-1)
        y = np.asarray(ys, dtype=np.float64).reshape(-1)
        omega = self.angular_freqs
        left = np.exp(1j * np.outer(x, omega[:, 0])) * self.coeffs
        right = np.exp(1j * np.outer(y, omega[:, 1]))
        return left @ right.T

    def dx(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        return self.differentiated_x().evaluate(x, y)

    def dy(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        return self.differentiated_y().evaluate(x, y)

    def differentiated_x(self) -> TrigPoly:
        return self.with_coeffs(self.coeffs * 1j * self.angular_freqs[:, 0])

    def differentiated_y(self) -> TrigPoly:
        return self.with_coeffs(self.coeffs * 1j * self.angular_freqs[:, 1])

    def with_coeffs(self, coeffs: ArrayLike) -> TrigPoly:
        return TrigPoly(self.freqs, np.asarray(coeffs, dtype=np.complex128), self.periods)

    def scaled(self, factor: complex) -> TrigPoly:
        return self.with_coeffs(self.coeffs * factor)

    def conjugate(self) -> TrigPoly:
        """The pointwise complex conjugate."""
        return TrigPoly.build(-self.freqs, np.conj(self.coeffs), self.periods)

    def __add__(self, other: TrigPoly) -> TrigPoly:
        if not isinstance(other, TrigPoly):
            return NotImplemented
        if not np.allclose(self.periods, other.periods, rtol=0.0, atol=TORUS_PERIOD_TOL):
            raise DimensionMismatch("cannot add trigonometric polynomials with different periods")
        return TrigPoly.build(
            np.concatenate([self.freqs, other.freqs]),
            np.concatenate([self.coeffs, other.coeffs]),
            self.periods,
        )

    def flipped(self) -> TrigPoly:
        return TrigPoly.build(self.freqs[:, ::-1], self.coeffs, (self.periods[1], self.periods[0]))

    # --- torus view: f(ζ, τ) = Σ c ζ^j τ^k for |ζ| = |τ| = 1 ---

    def require_torus(self) -> None:
        if not self.is_torus:
            raise NotTorusFunction(f"expected 2π periods, got {self.periods}")

    def evaluate_torus(self, zeta: ArrayLike, tau: ArrayLike) -> ComplexArray:
        self.require_torus()
        return self.evaluate(np.angle(np.asarray(zeta)), np.angle(np.asarray(tau)))

    def evaluate_torus_grid(self, zetas: ArrayLike, taus: ArrayLike) -> ComplexArray:
        self.require_torus()
        return self.evaluate_grid(np.angle(np.asarray(zetas)), np.angle(np.asarray(taus)))

    def torus_dzeta(self, zeta: ArrayLike, tau: ArrayLike) -> ComplexArray:
        """Complex derivative Σ j c ζ^(j-1) τ^k."""
        self.require_torus()
        z, t = np.broadcast_arrays(np.asarray(zeta, dtype=np.complex128), np.asarray(tau))
        return self.differentiated_x().evaluate(np.angle(z), np.angle(t)) / (1j * z)

    def torus_dtau(self, zeta: ArrayLike, tau: ArrayLike) -> ComplexArray:
        self.require_torus()
        z, t = np.broadcast_arrays(np.asarray(zeta), np.asarray(tau, dtype=np.complex128))
        return self.differentiated_y().evaluate(np.angle(z), np.angle(t)) / (1j * t)


@dataclass(frozen=True, eq=False)
class SeparableSum(Function2D):
    """
    f(x, y) = Σ φ_n(x) ψ_n(y).

    ``dual_terms`` optionally carries a second factorization of the same function;
    class-C estimates need both.
    """

    terms: tuple[tuple[Function1D, Function1D], ...]
    dual_terms: tuple[tuple[Function1D, Function1D], ...] | None = None

    @classmethod
    def of(
        cls,
        terms: Iterable[tuple[Function1D, Function1D]],
        dual_terms: Iterable[tuple[Function1D, Function1D]] | None = None,
    ) -> SeparableSum:
        return cls(
            terms=tuple(terms),
            dual_terms=None if dual_terms is None else tuple(dual_terms),
        )

    def evaluate(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        px, py = broadcast_points(x, y)
        total = np.zeros(px.shape, dtype=np.complex128)
        for phi, psi in self.terms:
            total += phi.evaluate(px) * psi.evaluate(py)
        return total

    def evaluate_grid(self, xs: ArrayLike, ys: ArrayLike) -> ComplexArray:
        x = np.asarray(xs, dtype=np.float64).reshape(-1)
        y = np.asarray(ys, dtype=np.float64).reshape(-1)
        total = np.zeros((x.size, y.size), dtype=np.complex128)
        for phi, psi in self.terms:
            total += np.outer(phi.evaluate(x), psi.evaluate(y))
        return total

    def dx(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        px, py = broadcast_points(x, y)
        total = np.zeros(px.shape, dtype=np.complex128)
        for phi, psi in self.terms:
            total += phi.derivative(px) * psi.evaluate(py)
        return total

    def dy(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        px, py = broadcast_points(x, y)
        total = np.zeros(px.shape, dtype=np.complex128)
        for phi, psi in self.terms:
            total += phi.evaluate(px) * psi.derivative(py)
        return total

    @property
    def bandlimit(self) -> float | None:
        radii: list[float] = []
        for phi, psi in self.terms:
            if phi.bandlimit is None or psi.bandlimit is None:
                return None
            radii.append(math.hypot(phi.bandlimit, psi.bandlimit))
        return max(radii, default=0.0)

    def sup_bound(self) -> float | None:
        total = 0.0
        for phi, psi in self.terms:
            phi_sup, psi_sup = phi.sup_bound(), psi.sup_bound()
            if phi_sup is None or psi_sup is None:
                return None
            total += phi_sup * psi_sup
        return total

    def flipped(self) -> SeparableSum:
        dual = None if self.dual_terms is None else tuple((b, a) for a, b in self.dual_terms)
        return SeparableSum(terms=tuple((b, a) for a, b in self.terms), dual_terms=dual)


@dataclass(frozen=True, eq=False)
class CallableFunction(Function2D):
    """
    Black-box f(x, y) with optional partial derivatives.

    Missing derivatives fall back to central differences with step
    cbrt(eps)·(1 + |x|) unless ``fd_fallback`` is off.
    """

    func: Vectorized2D
    func_dx: Vectorized2D | None = None
    func_dy: Vectorized2D | None = None
    band: float | None = None
    sup: float | None = None
    fd_fallback: bool = True
    name: str = field(default="callable", compare=False)

    def evaluate(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        px, py = broadcast_points(x, y)
        return np.asarray(self.func(px, py), dtype=np.complex128) * np.ones(px.shape)

    def dx(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        px, py = broadcast_points(x, y)
        if self.func_dx is not None:
            return np.asarray(self.func_dx(px, py), dtype=np.complex128) * np.ones(px.shape)
        return self._fallback(lambda t: self.func(t, py), px, "x")

    def dy(self, x: ArrayLike, y: ArrayLike) -> ComplexArray:
        px, py = broadcast_points(x, y)
        if self.func_dy is not None:
            return np.asarray(self.func_dy(px, py), dtype=np.complex128) * np.ones(px.shape)
        return self._fallback(lambda t: self.func(px, t), py, "y")

    def _fallback(self, partial: Vectorized1D, points: RealArray, variable: str) -> ComplexArray:
        if not self.fd_fallback:
            raise MissingDerivative(
                f"{self.name}: no d/d{variable} supplied and the finite-difference fallback is off"
            )
        logger.warning(f"{self.name}: d/d{variable} not supplied; using central differences")
        return _central_difference_1d(partial, points)

    @property
    def bandlimit(self) -> float | None:
        return self.band

    def sup_bound(self) -> float | None:
        return self.sup


def monomial(m: int, n: int) -> CallableFunction:
    """x^m y^n with exact partial derivatives."""

    def value(x: RealArray, y: RealArray) -> RealArray:
        return x**m * y**n

    def d_x(x: RealArray, y: RealArray) -> RealArray:
        return m * x ** max(m - 1, 0) * y**n if m else np.zeros(np.broadcast(x, y).shape)

    def d_y(x: RealArray, y: RealArray) -> RealArray:
        return n * x**m * y ** max(n - 1, 0) if n else np.zeros(np.broadcast(x, y).shape)

    return CallableFunction(value, d_x, d_y, name=f"x^{m} y^{n}")
