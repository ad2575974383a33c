"""
Tensor-product representations of trivariate integrands.

Every factor is stored as a value table on a finite spectral support: row a of an
x₁-table holds the values at the a-th point of the first spectral measure, and so on.
The supports the tables were built on travel with the representation so evaluators
can refuse a mismatched measure.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, replace

import numpy as np
from numpy.typing import ArrayLike

from src.core.errors import DimensionMismatch, NonFiniteEntries
from src.funcalc.functions import ComplexArray

Supports = tuple[ComplexArray, ComplexArray, ComplexArray]


def _table(values: ArrayLike, ndim: int, name: str) -> ComplexArray:
    array = np.asarray(values, dtype=np.complex128)
    if array.ndim != ndim:
        raise DimensionMismatch(f"{name} must be a {ndim}-D table, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise NonFiniteEntries(f"{name} has non-finite entries")
    return array


def _supports(supports: tuple[ArrayLike, ArrayLike, ArrayLike]) -> Supports:
    first, second, third = (np.asarray(s, dtype=np.complex128).reshape(-1) for s in supports)
    return first, second, third


def _max_row_l2(table: ComplexArray) -> float:
    if table.size == 0:
        return 0.0
    return float(np.max(np.linalg.norm(table, axis=1)))


def _max_operator_norm(stack: ComplexArray) -> float:
    if stack.size == 0:
        return 0.0
    return float(np.max(np.linalg.norm(stack, ord=2, axis=(1, 2))))


class TensorRep(ABC):
    """A factorization of Ψ(x₁, x₂, x₃) with three controlled factors."""

    supports: Supports

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.supports[0].size, self.supports[1].size, self.supports[2].size)

    @abstractmethod
    def factor_norms(self) -> tuple[float, float, float]:
        pass

    @abstractmethod
    def pointwise(self) -> ComplexArray:
        """Ψ summed out on the joint support; shape (n1, n2, n3)."""

    def _check_rows(self, *tables: tuple[ComplexArray, int, str]) -> None:
        for table, slot, name in tables:
            if table.shape[0] != self.supports[slot].size:
                raise DimensionMismatch(
                    f"{name} has {table.shape[0]} rows but the support has "
                    f"{self.supports[slot].size} points"
                )


@dataclass(frozen=True, eq=False)
class HaagerupRep(TensorRep):
    """Ψ = Σ_{j,k} α_j(x₁) β_jk(x₂) γ_k(x₃); alpha (n1, J), beta (n2, J, K), gamma (n3, K)."""

    alpha: ComplexArray
    beta: ComplexArray
    gamma: ComplexArray
    supports: Supports

    @classmethod
    def build(
        cls,
        alpha: ArrayLike,
        beta: ArrayLike,
        gamma: ArrayLike,
        supports: tuple[ArrayLike, ArrayLike, ArrayLike],
    ) -> HaagerupRep:
        rep = cls(
            alpha=_table(alpha, 2, "alpha"),
            beta=_table(beta, 3, "beta"),
            gamma=_table(gamma, 2, "gamma"),
            supports=_supports(supports),
        )
        rep._check_rows((rep.alpha, 0, "alpha"), (rep.beta, 1, "beta"), (rep.gamma, 2, "gamma"))
        if rep.beta.shape[1:] != (rep.alpha.shape[1], rep.gamma.shape[1]):
            raise DimensionMismatch(
                f"beta must be indexed ({rep.alpha.shape[1]}, {rep.gamma.shape[1]}), "
                f"got {rep.beta.shape[1:]}"
            )
        return rep

    def factor_norms(self) -> tuple[float, float, float]:
        return (
            _max_row_l2(self.alpha),
            _max_operator_norm(self.beta),
            _max_row_l2(self.gamma),
        )

    def pointwise(self) -> ComplexArray:
        return np.einsum("aj,bjk,ck->abc", self.alpha, self.beta, self.gamma)


@dataclass(frozen=True, eq=False)
class HaagerupLikeRep1(TensorRep):
    """Ψ = Σ_{j,k} α_j(x₁) β_k(x₂) γ_jk(x₃); alpha (n1, J), beta (n2, K), gamma (n3, J, K)."""

    alpha: ComplexArray
    beta: ComplexArray
    gamma: ComplexArray
    supports: Supports
    declared_bound: float | None = None

    @classmethod
    def build(
        cls,
        alpha: ArrayLike,
        beta: ArrayLike,
        gamma: ArrayLike,
        supports: tuple[ArrayLike, ArrayLike, ArrayLike],
        declared_bound: float | None = None,
    ) -> HaagerupLikeRep1:
        rep = cls(
            alpha=_table(alpha, 2, "alpha"),
            beta=_table(beta, 2, "beta"),
            gamma=_table(gamma, 3, "gamma"),
            supports=_supports(supports),
            declared_bound=declared_bound,
        )
        rep._check_rows((rep.alpha, 0, "alpha"), (rep.beta, 1, "beta"), (rep.gamma, 2, "gamma"))
        if rep.gamma.shape[1:] != (rep.alpha.shape[1], rep.beta.shape[1]):
            raise DimensionMismatch(
                f"gamma must be indexed ({rep.alpha.shape[1]}, {rep.beta.shape[1]}), "
                f"got {rep.gamma.shape[1:]}"
            )
        return rep

    def factor_norms(self) -> tuple[float, float, float]:
        return (
            _max_row_l2(self.alpha),
            _max_row_l2(self.beta),
            _max_operator_norm(self.gamma),
        )

    def pointwise(self) -> ComplexArray:
        return np.einsum("aj,bk,cjk->abc", self.alpha, self.beta, self.gamma)


@dataclass(frozen=True, eq=False)
class HaagerupLikeRep2(TensorRep):
    """Ψ = Σ_{j,k} α_jk(x₁) β_j(x₂) γ_k(x₃); alpha (n1, J, K), beta (n2, J), gamma (n3, K)."""

    alpha: ComplexArray
    beta: ComplexArray
    gamma: ComplexArray
    supports: Supports
    declared_bound: float | None = None

    @classmethod
    def build(
        cls,
        alpha: ArrayLike,
        beta: ArrayLike,
        gamma: ArrayLike,
        supports: tuple[ArrayLike, ArrayLike, ArrayLike],
        declared_bound: float | None = None,
    ) -> HaagerupLikeRep2:
        rep = cls(
            alpha=_table(alpha, 3, "alpha"),
            beta=_table(beta, 2, "beta"),
            gamma=_table(gamma, 2, "gamma"),
            supports=_supports(supports),
            declared_bound=declared_bound,
        )
        rep._check_rows((rep.alpha, 0, "alpha"), (rep.beta, 1, "beta"), (rep.gamma, 2, "gamma"))
        if rep.alpha.shape[1:] != (rep.beta.shape[1], rep.gamma.shape[1]):
            raise DimensionMismatch(
                f"alpha must be indexed ({rep.beta.shape[1]}, {rep.gamma.shape[1]}), "
                f"got {rep.alpha.shape[1:]}"
            )
        return rep

    def factor_norms(self) -> tuple[float, float, float]:
        return (
            _max_operator_norm(self.alpha),
            _max_row_l2(self.beta),
            _max_row_l2(self.gamma),
        )

    def pointwise(self) -> ComplexArray:
        return np.einsum("ajk,bj,ck->abc", self.alpha, self.beta, self.gamma)


@dataclass(frozen=True, eq=False)
class ProjectiveRep(TensorRep):
    """Ψ = Σ_j φ_j(x₁) ψ_j(x₂) χ_j(x₃); phi (n1, J), psi (n2, J), chi (n3, J)."""

    phi: ComplexArray
    psi: ComplexArray
    chi: ComplexArray
    supports: Supports

    @classmethod
    def build(
        cls,
        phi: ArrayLike,
        psi: ArrayLike,
        chi: ArrayLike,
        supports: tuple[ArrayLike, ArrayLike, ArrayLike],
    ) -> ProjectiveRep:
        rep = cls(
            phi=_table(phi, 2, "phi"),
            psi=_table(psi, 2, "psi"),
            chi=_table(chi, 2, "chi"),
            supports=_supports(supports),
        )
        rep._check_rows((rep.phi, 0, "phi"), (rep.psi, 1, "psi"), (rep.chi, 2, "chi"))
        if not rep.phi.shape[1] == rep.psi.shape[1] == rep.chi.shape[1]:
            raise DimensionMismatch("phi, psi and chi must have the same number of terms")
        return rep

    @property
    def terms(self) -> int:
        return int(self.phi.shape[1])

    def term_weights(self) -> ComplexArray:
        """c_j = ‖φ_j‖_∞ ‖ψ_j‖_∞ ‖χ_j‖_∞ over the support."""
        return (
            np.max(np.abs(self.phi), axis=0, initial=0.0)
            * np.max(np.abs(self.psi), axis=0, initial=0.0)
            * np.max(np.abs(self.chi), axis=0, initial=0.0)
        )

    def projective_norm(self) -> float:
        return float(np.sum(self.term_weights()))

    def factor_norms(self) -> tuple[float, float, float]:
        return embed_projective(self).factor_norms()

    def pointwise(self) -> ComplexArray:
        return np.einsum("aj,bj,cj->abc", self.phi, self.psi, self.chi)


def embed_projective(rep: ProjectiveRep) -> HaagerupRep:
    """
    Haagerup representation of a projective one with a diagonal middle factor.

    α_j = √c_j φ_j/‖φ_j‖, β_jj = ψ_j/‖ψ_j‖, γ_j = √c_j χ_j/‖χ_j‖, so each outer factor
    has norm at most (Σ c_j)^{1/2} and the middle factor at most 1. Terms that vanish
    on the support are dropped.
    """
    phi_sup = np.max(np.abs(rep.phi), axis=0, initial=0.0)
    psi_sup = np.max(np.abs(rep.psi), axis=0, initial=0.0)
    chi_sup = np.max(np.abs(rep.chi), axis=0, initial=0.0)
    weights = phi_sup * psi_sup * chi_sup
    keep = weights > 0.0

    root = np.sqrt(weights[keep])
    alpha = rep.phi[:, keep] * (root / phi_sup[keep])
    gamma = rep.chi[:, keep] * (root / chi_sup[keep])
    scaled_psi = rep.psi[:, keep] / psi_sup[keep]

    count = int(np.count_nonzero(keep))
    beta = np.zeros((rep.psi.shape[0], count, count), dtype=np.complex128)
    diagonal = np.arange(count)
    beta[:, diagonal, diagonal] = scaled_psi
    return HaagerupRep.build(alpha, beta, gamma, rep.supports)


def haagerup_norm_of_rep(rep: TensorRep) -> float:
    """
    Product of the three factor norms of this particular representation.

    This is an upper bound on the tensor norm, whose infimum over all
    representations is not computed.
    """
    first, second, third = rep.factor_norms()
    product = first * second * third
    return product if math.isfinite(product) else math.inf


def scaled_rep(rep: TensorRep, factor: complex) -> TensorRep:
    """The same representation with its first factor multiplied by ``factor``."""
    if isinstance(rep, HaagerupRep):
        return replace(rep, alpha=rep.alpha * factor)
    if isinstance(rep, (HaagerupLikeRep1, HaagerupLikeRep2)):
        bound = None if rep.declared_bound is None else rep.declared_bound * abs(factor)
        return replace(rep, alpha=rep.alpha * factor, declared_bound=bound)
    if isinstance(rep, ProjectiveRep):
        return replace(rep, phi=rep.phi * factor)
    raise TypeError(f"unknown representation {type(rep).__name__}")


def zero_rep(kind: type[TensorRep], supports: tuple[ArrayLike, ArrayLike, ArrayLike]) -> TensorRep:
    """A representation of Ψ ≡ 0 with no terms."""
    first, second, third = _supports(supports)
    n1, n2, n3 = first.size, second.size, third.size
    if kind is HaagerupRep:
        return HaagerupRep.build(np.zeros((n1, 0)), np.zeros((n2, 0, 0)), np.zeros((n3, 0)), supports)
    if kind is HaagerupLikeRep1:
        return HaagerupLikeRep1.build(np.zeros((n1, 0)), np.zeros((n2, 0)), np.zeros((n3, 0, 0)), supports, 0.0)
    if kind is HaagerupLikeRep2:
        return HaagerupLikeRep2.build(np.zeros((n1, 0, 0)), np.zeros((n2, 0)), np.zeros((n3, 0)), supports, 0.0)
    if kind is ProjectiveRep:
        return ProjectiveRep.build(np.zeros((n1, 0)), np.zeros((n2, 0)), np.zeros((n3, 0)), supports)
    raise TypeError(f"unknown representation {kind.__name__}")
