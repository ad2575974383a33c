"""
Finite-dimensional triple operator integrals W = ∭ Ψ dE₁ T dE₂ R dE₃.

``toi_direct`` sums the integrand over the joint spectrum and is the reference every
representation-based evaluator is checked against.
"""

from __future__ import annotations

from collections.abc import Callable
from typing import Union

import numpy as np
from numpy.typing import ArrayLike

from src.core.errors import DimensionMismatch, RegimeMismatch, SupportNotCovered
from src.funcalc.functions import ComplexArray
from src.matcore.dense import DenseMatrix, adjoint, as_dense, matrix_unit
from src.matcore.schatten import SchattenExponent, parse_exponent
from src.matcore.spectral import SpectralMeasure
from src.toi.reps import (
    HaagerupLikeRep1,
    HaagerupLikeRep2,
    HaagerupRep,
    ProjectiveRep,
    TensorRep,
)
from src.utils.logging import get_logger

logger = get_logger(__name__)

SUPPORT_TOL = 1e-12

Integrand = Union[Callable[[np.ndarray, np.ndarray, np.ndarray], ArrayLike], ArrayLike]


def integrand_table(
    psi: Integrand, sm1: SpectralMeasure, sm2: SpectralMeasure, sm3: SpectralMeasure
) -> ComplexArray:
    """Ψ on the joint support as an (n1, n2, n3) table; callables are evaluated on the grid."""
    shape = (sm1.size, sm2.size, sm3.size)
    if callable(psi):
        values = psi(sm1.support[:, None, None], sm2.support[None, :, None], sm3.support[None, None, :])
        table = np.broadcast_to(np.asarray(values, dtype=np.complex128), shape)
    else:
        table = np.asarray(psi, dtype=np.complex128)
    if table.shape != shape:
        raise DimensionMismatch(f"integrand table must have shape {shape}, got {table.shape}")
    return table


def _operands(
    sm1: SpectralMeasure, sm2: SpectralMeasure, sm3: SpectralMeasure, T: ArrayLike, R: ArrayLike
) -> tuple[DenseMatrix, DenseMatrix]:
    left = as_dense(T)
    right = as_dense(R)
    if left.shape != (sm1.dim, sm2.dim):
        raise DimensionMismatch(f"T must be {sm1.dim}x{sm2.dim}, got {left.shape}")
    if right.shape != (sm2.dim, sm3.dim):
        raise DimensionMismatch(f"R must be {sm2.dim}x{sm3.dim}, got {right.shape}")
    return left, right


def toi_direct(
    psi: Integrand,
    sm1: SpectralMeasure,
    sm2: SpectralMeasure,
    sm3: SpectralMeasure,
    T: ArrayLike,
    R: ArrayLike,
) -> DenseMatrix:
    """
    Σ_{i,j,k} Ψ(λ_i, μ_j, ν_k) P_i T Q_j R S_k.

    Evaluated in the eigenframes: with T̃ = V₁*TV₂ and R̃ = V₂*RV₃ the sum becomes one
    Hadamard-weighted product per point of the middle measure.
    """
    table = integrand_table(psi, sm1, sm2, sm3)
    left, right = _operands(sm1, sm2, sm3, T, R)

    t_frame = adjoint(sm1.frame) @ left @ sm2.frame
    r_frame = adjoint(sm2.frame) @ right @ sm3.frame
    outer = np.ix_(sm1.labels, sm3.labels)

    accumulated = np.zeros((sm1.dim, sm3.dim), dtype=np.complex128)
    for point in range(sm2.size):
        columns = sm2.labels == point
        weights = table[:, point, :][outer]
        accumulated += weights * (t_frame[:, columns] @ r_frame[columns, :])
    return sm1.frame @ accumulated @ adjoint(sm3.frame)


def check_supports(rep: TensorRep, sm1: SpectralMeasure, sm2: SpectralMeasure, sm3: SpectralMeasure) -> None:
    for slot, measure in enumerate((sm1, sm2, sm3)):
        support = rep.supports[slot]
        if support.size != measure.size or not np.allclose(
            support, measure.support, rtol=0.0, atol=SUPPORT_TOL
        ):
            raise SupportNotCovered(
                f"representation slot {slot + 1} was built on {support.size} points, "
                f"the measure has {measure.size}"
            )


def toi_haagerup(
    rep: HaagerupRep,
    sm1: SpectralMeasure,
    sm2: SpectralMeasure,
    sm3: SpectralMeasure,
    T: ArrayLike,
    R: ArrayLike,
) -> DenseMatrix:
    """Σ_j (∫α_j dE₁) T (Σ_k (∫β_jk dE₂) R (∫γ_k dE₃)), with j the outer and k the inner index."""
    check_supports(rep, sm1, sm2, sm3)
    left, right = _operands(sm1, sm2, sm3, T, R)
    terms_j, terms_k = rep.alpha.shape[1], rep.gamma.shape[1]
    if terms_j == 0 or terms_k == 0:
        return np.zeros((sm1.dim, sm3.dim), dtype=np.complex128)

    first = sm1.functions_of(rep.alpha)
    middle = sm2.functions_of(rep.beta.reshape(sm2.size, terms_j * terms_k))
    middle = middle.reshape(terms_j, terms_k, sm2.dim, sm2.dim)
    last = sm3.functions_of(rep.gamma)

    right_last = np.einsum("ab,kbc->kac", right, last)
    inner = np.einsum("jkab,kbc->jac", middle, right_last)
    return np.einsum("jab,bc,jcd->ad", first, left, inner)


def toi_projective(
    rep: ProjectiveRep,
    sm1: SpectralMeasure,
    sm2: SpectralMeasure,
    sm3: SpectralMeasure,
    T: ArrayLike,
    R: ArrayLike,
) -> DenseMatrix:
    """Σ_j (∫φ_j dE₁) T (∫ψ_j dE₂) R (∫χ_j dE₃)."""
    check_supports(rep, sm1, sm2, sm3)
    left, right = _operands(sm1, sm2, sm3, T, R)
    if rep.terms == 0:
        return np.zeros((sm1.dim, sm3.dim), dtype=np.complex128)
    first = sm1.functions_of(rep.phi)
    middle = sm2.functions_of(rep.psi)
    last = sm3.functions_of(rep.chi)
    return np.einsum("jab,bc,jcd,de,jef->af", first, left, middle, right, last)


def _require_duality_regime(p: SchattenExponent | str) -> None:
    exponent = parse_exponent(p)
    if not 1.0 <= exponent <= 2.0:
        raise RegimeMismatch(f"trace duality evaluation needs p in [1, 2], got {exponent}")


def toi_haagerup_like_1(
    rep: HaagerupLikeRep1,
    sm1: SpectralMeasure,
    sm2: SpectralMeasure,
    sm3: SpectralMeasure,
    T: ArrayLike,
    R: ArrayLike,
    p: SchattenExponent | str = 1.0,
) -> DenseMatrix:
    """
    W defined by trace(WQ) = trace((∭ Ψ dE₂ R dE₃ Q dE₁) T) for every Q.

    The inner integral has the integrand (x₂, x₃, x₁) ↦ Ψ(x₁, x₂, x₃), a Haagerup
    representation with factors (β, γᵀ, α). W[b, a] is the pairing with the matrix unit
    Q = E_ab.
    """
    _require_duality_regime(p)
    check_supports(rep, sm1, sm2, sm3)
    left, right = _operands(sm1, sm2, sm3, T, R)

    inner = HaagerupRep.build(
        rep.beta,
        np.transpose(rep.gamma, (0, 2, 1)),
        rep.alpha,
        (rep.supports[1], rep.supports[2], rep.supports[0]),
    )
    result = np.zeros((sm1.dim, sm3.dim), dtype=np.complex128)
    for a in range(sm3.dim):
        for b in range(sm1.dim):
            unit = matrix_unit(sm3.dim, sm1.dim, a, b)
            result[b, a] = np.trace(toi_haagerup(inner, sm2, sm3, sm1, right, unit) @ left)
    return result


def toi_haagerup_like_2(
    rep: HaagerupLikeRep2,
    sm1: SpectralMeasure,
    sm2: SpectralMeasure,
    sm3: SpectralMeasure,
    T: ArrayLike,
    R: ArrayLike,
    p: SchattenExponent | str = 1.0,
) -> DenseMatrix:
    """
    W defined by trace(WQ) = trace((∭ Ψ dE₃ Q dE₁ T dE₂) R) for every Q.

    The inner integrand (x₃, x₁, x₂) ↦ Ψ(x₁, x₂, x₃) has the Haagerup factors (γ, αᵀ, β).
    """
    _require_duality_regime(p)
    check_supports(rep, sm1, sm2, sm3)
    left, right = _operands(sm1, sm2, sm3, T, R)

    inner = HaagerupRep.build(
        rep.gamma,
        np.transpose(rep.alpha, (0, 2, 1)),
        rep.beta,
        (rep.supports[2], rep.supports[0], rep.supports[1]),
    )
    result = np.zeros((sm1.dim, sm3.dim), dtype=np.complex128)
    for a in range(sm3.dim):
        for b in range(sm1.dim):
            unit = matrix_unit(sm3.dim, sm1.dim, a, b)
            result[b, a] = np.trace(toi_haagerup(inner, sm3, sm1, sm2, unit, left) @ right)
    return result


def evaluate_rep(
    rep: TensorRep,
    sm1: SpectralMeasure,
    sm2: SpectralMeasure,
    sm3: SpectralMeasure,
    T: ArrayLike,
    R: ArrayLike,
    p: SchattenExponent | str = 1.0,
) -> DenseMatrix:
    """Dispatch to the evaluator matching the representation type."""
    if isinstance(rep, HaagerupRep):
        return toi_haagerup(rep, sm1, sm2, sm3, T, R)
    if isinstance(rep, HaagerupLikeRep1):
        return toi_haagerup_like_1(rep, sm1, sm2, sm3, T, R, p)
    if isinstance(rep, HaagerupLikeRep2):
        return toi_haagerup_like_2(rep, sm1, sm2, sm3, T, R, p)
    if isinstance(rep, ProjectiveRep):
        return toi_projective(rep, sm1, sm2, sm3, T, R)
    raise TypeError(f"unknown representation {type(rep).__name__}")


def adjoint_integrand(table: ArrayLike) -> ComplexArray:
    """(x₃, x₂, x₁) ↦ conj Ψ(x₁, x₂, x₃); the integrand of W* against (R*, T*)."""
    return np.conj(np.asarray(table, dtype=np.complex128)).transpose(2, 1, 0)
