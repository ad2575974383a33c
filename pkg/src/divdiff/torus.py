from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from src.core.errors import DegreeTooHigh
from src.divdiff.divided import torus_divided_diff_1
from src.funcalc.functions import ComplexArray, TrigPoly

UNIT_MODULUS_TOL = 1e-12


def roots_of_unity(order: int) -> ComplexArray:
    """The group Π_order of order-th roots of 1, ordered by argument in [0, 2π)."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    return np.exp(2j * math.pi * np.arange(order) / order)


def xi_kernel(n: int, z: ArrayLike) -> ComplexArray:
    """
    Ξ_n(z) = (z^{n+1} − z^{−n}) / ((2n+1)(z − 1)), evaluated as the mean of z^k, |k| ≤ n.

    The polynomial form is exact at z = 1, where Ξ_n = 1.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    points = np.asarray(z, dtype=np.complex128)
    if np.any(np.abs(np.abs(points) - 1.0) > UNIT_MODULUS_TOL):
        raise ValueError("Ξ_n is evaluated on the unit circle only")
    theta = np.angle(points)
    harmonics = np.arange(-n, n + 1, dtype=np.float64)
    return np.exp(1j * theta[..., None] * harmonics).mean(axis=-1)


def xi_weights(n: int, zeta: ArrayLike) -> ComplexArray:
    """Ξ_n(ζ κ̄) for κ in Π_{2n+1}; shape (..., 2n+1)."""
    roots = roots_of_unity(2 * n + 1)
    points = np.asarray(zeta, dtype=np.complex128)
    return xi_kernel(n, points[..., None] * np.conj(roots))


@dataclass(frozen=True, eq=False)
class TorusKernel:
    n: int

    @property
    def order(self) -> int:
        return 2 * self.n + 1

    @property
    def roots(self) -> ComplexArray:
        return roots_of_unity(self.order)

    def __call__(self, z: ArrayLike) -> ComplexArray:
        return xi_kernel(self.n, z)

    def weights(self, zeta: ArrayLike) -> ComplexArray:
        return xi_weights(self.n, zeta)


def torus_divdiff_matrix(f: TrigPoly, tau: complex, n: int) -> ComplexArray:
    """
    {(f(κ, τ) − f(ξ, τ)) / (κ − ξ)} over κ, ξ ∈ Π_{2n+1}.

    The diagonal carries the complex derivative ∂f/∂ζ(κ, τ), the limit of the
    quotient along the circle.
    """
    f.require_torus()
    if f.degree_x > n:
        raise DegreeTooHigh(f"x-degree {f.degree_x} exceeds n={n}")
    roots = roots_of_unity(2 * n + 1)
    return torus_divided_diff_1(f, roots[:, None], roots[None, :], np.full((1, 1), tau))


def torus_divdiff_tables(f: TrigPoly, taus: ArrayLike, n: int) -> ComplexArray:
    """Stack of torus divided-difference matrices, one per τ; shape (len(taus), 2n+1, 2n+1)."""
    f.require_torus()
    if f.degree_x > n:
        raise DegreeTooHigh(f"x-degree {f.degree_x} exceeds n={n}")
    roots = roots_of_unity(2 * n + 1)
    t = np.asarray(taus, dtype=np.complex128).reshape(-1)
    return torus_divided_diff_1(f, roots[None, :, None], roots[None, None, :], t[:, None, None])


def torus_expand_D1(f: TrigPoly, zeta1: complex, zeta2: complex, tau: complex, n: int) -> complex:
    """Σ_{κ,ξ} Ξ_n(ζ1 κ̄) Ξ_n(ζ2 ξ̄) (torus divided-difference matrix)[κ, ξ]."""
    matrix = torus_divdiff_matrix(f, tau, n)
    return complex(xi_weights(n, zeta1) @ matrix @ xi_weights(n, zeta2))
