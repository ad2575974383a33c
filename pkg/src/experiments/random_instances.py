from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Protocol, TypeVar

import numpy as np

from src.funcalc.functions import SeparableSum, TrigPoly, TrigPoly1D
from src.matcore.dense import DenseMatrix
from src.matcore.random_matrices import (
    perturb_hermitian,
    perturb_unitary,
    random_hermitian_with_spectrum,
    random_unitary,
)
from src.toi.reps import HaagerupRep, ProjectiveRep

DEFAULT_DEGREE = 4
DEFAULT_TERMS = 6

T = TypeVar("T")


def trial_rng(seed: int, *keys: int) -> np.random.Generator:
    """Independent PCG64 stream for (seed, keys...); identical at any parallelism level."""
    return np.random.default_rng(np.random.SeedSequence([seed, *keys]))


def _complex_normal(rng: np.random.Generator, size: int) -> np.ndarray:
    return (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / math.sqrt(2.0)


def random_trig_poly(
    rng: np.random.Generator,
    degree: int = DEFAULT_DEGREE,
    terms: int = DEFAULT_TERMS,
) -> TrigPoly:
    """2π-periodic bivariate polynomial with ``terms`` random frequencies in [−degree, degree]²."""
    freqs = rng.integers(-degree, degree + 1, size=(terms, 2))
    coeffs = _complex_normal(rng, terms) / terms
    return TrigPoly.build(freqs, coeffs)


def random_trig_poly_1d(
    rng: np.random.Generator,
    degree: int = DEFAULT_DEGREE,
    terms: int = 3,
) -> TrigPoly1D:
    freqs = rng.integers(-degree, degree + 1, size=terms)
    coeffs = _complex_normal(rng, terms) / terms
    return TrigPoly1D.build(freqs, coeffs)


def random_separable(
    rng: np.random.Generator,
    rank: int = 3,
    degree: int = DEFAULT_DEGREE,
) -> SeparableSum:
    """Rank-``rank`` separable trig polynomial carrying a rescaled dual factorization."""
    terms = [(random_trig_poly_1d(rng, degree), random_trig_poly_1d(rng, degree)) for _ in range(rank)]
    return SeparableSum.of(terms, random_dual_factorization(terms, rng))


def random_dual_factorization(
    terms: list[tuple[TrigPoly1D, TrigPoly1D]],
    rng: np.random.Generator,
) -> list[tuple[TrigPoly1D, TrigPoly1D]]:
    """Same function, factors rebalanced as (c·φ, ψ/c) with random c > 0."""
    scales = np.exp(rng.uniform(-1.0, 1.0, size=len(terms)))
    return [(phi.scaled(c), psi.scaled(1.0 / c)) for (phi, psi), c in zip(terms, scales)]


@dataclass(frozen=True)
class OperatorPairs:
    """Two pairs (A1, B1), (A2, B2) of commensurate operators."""

    A1: DenseMatrix
    A2: DenseMatrix
    B1: DenseMatrix
    B2: DenseMatrix


def random_hermitian_pairs(
    dim: int,
    rng: np.random.Generator,
    low: float = -math.pi,
    high: float = math.pi,
    perturbation: float | None = None,
) -> OperatorPairs:
    """
    Hermitian pairs with spectra inside [low, high].

    Without ``perturbation`` the four operators are independent; otherwise A2, B2 are
    A1, B1 moved by the given operator-norm step and pulled back into the interval.
    """
    A1 = random_hermitian_with_spectrum(dim, rng, low, high)
    B1 = random_hermitian_with_spectrum(dim, rng, low, high)
    if perturbation is None:
        A2 = random_hermitian_with_spectrum(dim, rng, low, high)
        B2 = random_hermitian_with_spectrum(dim, rng, low, high)
    else:
        A2 = _clip_spectrum(perturb_hermitian(A1, rng, perturbation), low, high)
        B2 = _clip_spectrum(perturb_hermitian(B1, rng, perturbation), low, high)
    return OperatorPairs(A1=A1, A2=A2, B1=B1, B2=B2)


def random_unitary_pairs(
    dim: int,
    rng: np.random.Generator,
    angle: float | None = None,
) -> OperatorPairs:
    U1 = random_unitary(dim, rng)
    V1 = random_unitary(dim, rng)
    if angle is None:
        return OperatorPairs(A1=U1, A2=random_unitary(dim, rng), B1=V1, B2=random_unitary(dim, rng))
    return OperatorPairs(
        A1=U1,
        A2=perturb_unitary(U1, rng, angle),
        B1=V1,
        B2=perturb_unitary(V1, rng, angle),
    )


def _clip_spectrum(matrix: DenseMatrix, low: float, high: float) -> DenseMatrix:
    eigenvalues, frame = np.linalg.eigh(matrix)
    clipped = (frame * np.clip(eigenvalues, low, high)) @ frame.conj().T
    return (clipped + clipped.conj().T) / 2.0


class TrialMapper(Protocol):
    """Runs ``trial(0), ..., trial(count − 1)`` and returns the results in index order."""

    def __call__(self, trial: Callable[[int], T], count: int) -> list[T]: ...


def sequential_map(trial: Callable[[int], T], count: int) -> list[T]:
    return [trial(index) for index in range(count)]


def random_table(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    return _complex_normal(rng, int(np.prod(shape))).reshape(shape)


def random_haagerup_rep(
    supports: tuple[np.ndarray, np.ndarray, np.ndarray],
    rng: np.random.Generator,
    inner: int = 3,
    outer: int = 3,
) -> HaagerupRep:
    n1, n2, n3 = (support.size for support in supports)
    return HaagerupRep.build(
        random_table(rng, (n1, outer)),
        random_table(rng, (n2, outer, inner)),
        random_table(rng, (n3, inner)),
        supports,
    )


def random_projective_rep(
    supports: tuple[np.ndarray, np.ndarray, np.ndarray],
    rng: np.random.Generator,
    terms: int = 3,
) -> ProjectiveRep:
    n1, n2, n3 = (support.size for support in supports)
    return ProjectiveRep.build(
        random_table(rng, (n1, terms)),
        random_table(rng, (n2, terms)),
        random_table(rng, (n3, terms)),
        supports,
    )
