from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from src.core.errors import NotTorusFunction
from src.funcalc.functions import ComplexArray, Function2D, TrigPoly
from src.matcore.spectral import SpectralKind, SpectralMeasure


def divided_diff_1(f: Function2D, x1: ArrayLike, x2: ArrayLike, y: ArrayLike) -> ComplexArray:
    """(f(x1, y) − f(x2, y)) / (x1 − x2), with ∂f/∂x where x1 = x2."""
    p1, p2, py = (np.asarray(v, dtype=np.float64) for v in np.broadcast_arrays(x1, x2, y))
    gap = p1 - p2
    coincident = gap == 0.0
    quotient = (f.evaluate(p1, py) - f.evaluate(p2, py)) / np.where(coincident, 1.0, gap)
    if np.any(coincident):
        quotient = np.asarray(quotient, dtype=np.complex128).copy()
        quotient[coincident] = f.dx(p1[coincident], py[coincident])
    return np.asarray(quotient, dtype=np.complex128)


def divided_diff_2(f: Function2D, x: ArrayLike, y1: ArrayLike, y2: ArrayLike) -> ComplexArray:
    """(f(x, y1) − f(x, y2)) / (y1 − y2), with ∂f/∂y where y1 = y2."""
    return divided_diff_1(f.flipped(), y1, y2, x)


def torus_divided_diff_1(
    f: TrigPoly, zeta1: ArrayLike, zeta2: ArrayLike, tau: ArrayLike
) -> ComplexArray:
    """(f(ζ1, τ) − f(ζ2, τ)) / (ζ1 − ζ2) on the torus, with the complex derivative at ζ1 = ζ2."""
    if not isinstance(f, TrigPoly):
        raise NotTorusFunction(f"{type(f).__name__} is not a trigonometric polynomial")
    z1, z2, t = (np.asarray(v, dtype=np.complex128) for v in np.broadcast_arrays(zeta1, zeta2, tau))
    gap = z1 - z2
    coincident = gap == 0.0
    quotient = (f.evaluate_torus(z1, t) - f.evaluate_torus(z2, t)) / np.where(coincident, 1.0, gap)
    if np.any(coincident):
        quotient = np.asarray(quotient, dtype=np.complex128).copy()
        quotient[coincident] = f.torus_dzeta(z1[coincident], t[coincident])
    return np.asarray(quotient, dtype=np.complex128)


def torus_divided_diff_2(
    f: TrigPoly, zeta: ArrayLike, tau1: ArrayLike, tau2: ArrayLike
) -> ComplexArray:
    if not isinstance(f, TrigPoly):
        raise NotTorusFunction(f"{type(f).__name__} is not a trigonometric polynomial")
    return torus_divided_diff_1(f.flipped(), tau1, tau2, zeta)


def first_divided_difference_table(
    f: Function2D, sm1: SpectralMeasure, sm2: SpectralMeasure, sm3: SpectralMeasure
) -> ComplexArray:
    """𝔇^[1]f on the joint spectral support, shape (|sm1|, |sm2|, |sm3|)."""
    if sm1.kind == SpectralKind.UNITARY:
        return torus_divided_diff_1(
            f,  # type: ignore[arg-type]
            sm1.values[:, None, None],
            sm2.values[None, :, None],
            sm3.values[None, None, :],
        )
    return divided_diff_1(
        f,
        sm1.real_values[:, None, None],
        sm2.real_values[None, :, None],
        sm3.real_values[None, None, :],
    )


def second_divided_difference_table(
    f: Function2D, sm1: SpectralMeasure, sm2: SpectralMeasure, sm3: SpectralMeasure
) -> ComplexArray:
    """𝔇^[2]f on the joint spectral support, shape (|sm1|, |sm2|, |sm3|)."""
    if sm1.kind == SpectralKind.UNITARY:
        return torus_divided_diff_2(
            f,  # type: ignore[arg-type]
            sm1.values[:, None, None],
            sm2.values[None, :, None],
            sm3.values[None, None, :],
        )
    return divided_diff_2(
        f,
        sm1.real_values[:, None, None],
        sm2.real_values[None, :, None],
        sm3.real_values[None, None, :],
    )
