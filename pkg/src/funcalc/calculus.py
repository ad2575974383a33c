from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike

from src.core.errors import DimensionMismatch, NotTorusFunction
from src.funcalc.functions import ComplexArray, Function2D, TrigPoly
from src.matcore.dense import DenseMatrix, adjoint, as_dense
from src.matcore.spectral import SpectralKind, SpectralMeasure, require_kind


def schur_multiplier(
    table: ArrayLike,
    left: SpectralMeasure,
    right: SpectralMeasure,
    operand: ArrayLike | None = None,
) -> DenseMatrix:
    """
    Double operator integral Σ_ij F[i, j] P_i T Q_j.

    In eigenframe coordinates this is the Hadamard product of F (expanded to
    columns) with V* T W, so no projector is ever formed.
    """
    values = np.asarray(table, dtype=np.complex128)
    if values.shape != (left.size, right.size):
        raise DimensionMismatch(
            f"expected a {left.size}x{right.size} symbol table, got {values.shape}"
        )

    if operand is None:
        if left.dim != right.dim:
            raise DimensionMismatch(f"spectral measures act on dims {left.dim} and {right.dim}")
        middle = adjoint(left.frame) @ right.frame
    else:
        t = as_dense(operand)
        if t.shape != (left.dim, right.dim):
            raise DimensionMismatch(
                f"operand must be {left.dim}x{right.dim}, got {t.shape[0]}x{t.shape[1]}"
            )
        middle = adjoint(left.frame) @ t @ right.frame

    expanded = values[np.ix_(left.labels, right.labels)]
    return left.frame @ (expanded * middle) @ adjoint(right.frame)


def apply_f_AB(f: Function2D, sm_a: SpectralMeasure, sm_b: SpectralMeasure) -> DenseMatrix:
    """f(A, B) = Σ_ij f(λ_i, μ_j) P_i Q_j for Hermitian A, B."""
    require_kind(sm_a, SpectralKind.HERMITIAN)
    require_kind(sm_b, SpectralKind.HERMITIAN)
    table = f.evaluate_grid(sm_a.real_values, sm_b.real_values)
    return schur_multiplier(table, sm_a, sm_b)


def apply_f_UV(f: Function2D, sm_u: SpectralMeasure, sm_v: SpectralMeasure) -> DenseMatrix:
    """f(U, V) = Σ_ij f(ζ_i, τ_j) P_i Q_j for unitary U, V and a 2π-periodic f."""
    require_kind(sm_u, SpectralKind.UNITARY)
    require_kind(sm_v, SpectralKind.UNITARY)
    if not isinstance(f, TrigPoly):
        raise NotTorusFunction(f"{type(f).__name__} is not a trigonometric polynomial")
    table = f.evaluate_torus_grid(sm_u.values, sm_v.values)
    return schur_multiplier(table, sm_u, sm_v)


def apply_f(f: Function2D, sm_a: SpectralMeasure, sm_b: SpectralMeasure) -> DenseMatrix:
    """Dispatch on the kind of the spectral measures."""
    if sm_a.kind == SpectralKind.UNITARY:
        return apply_f_UV(f, sm_a, sm_b)
    return apply_f_AB(f, sm_a, sm_b)


def function_values(f: Function2D, sm_a: SpectralMeasure, sm_b: SpectralMeasure) -> ComplexArray:
    if sm_a.kind == SpectralKind.UNITARY:
        if not isinstance(f, TrigPoly):
            raise NotTorusFunction(f"{type(f).__name__} is not a trigonometric polynomial")
        return f.evaluate_torus_grid(sm_a.values, sm_b.values)
    return f.evaluate_grid(sm_a.real_values, sm_b.real_values)
