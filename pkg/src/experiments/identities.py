from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from src.core.errors import DimensionMismatch
from src.core.models.identity_report import IdentityKind, IdentityReport, IdentitySummary
from src.core.models.schatten_report import Verdict
from src.divdiff.divided import first_divided_difference_table, second_divided_difference_table
from src.experiments.random_instances import (
    TrialMapper,
    random_hermitian_pairs,
    random_trig_poly,
    random_unitary_pairs,
    sequential_map,
    trial_rng,
)
from src.funcalc.calculus import apply_f
from src.funcalc.functions import Function2D, TrigPoly
from src.matcore.dense import DenseMatrix, as_dense, frobenius
from src.matcore.schatten import SchattenExponent, format_exponent, schatten_norm
from src.matcore.spectral import (
    SpectralKind,
    SpectralMeasure,
    hermitian_measure,
    scalar_measure,
    unitary_measure,
)
from src.toi.evaluators import toi_direct
from src.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_TOLERANCE = 1e-8
UNITARY_DEGREE = 3


@dataclass(frozen=True)
class _Residuals:
    full: float
    first: float
    second: float
    difference: DenseMatrix


def _relative(lhs: DenseMatrix, rhs: DenseMatrix) -> float:
    return frobenius(lhs - rhs) / (1.0 + frobenius(lhs))


def _same_dims(*matrices: DenseMatrix) -> int:
    dims = {m.shape for m in matrices}
    if len(dims) != 1:
        raise DimensionMismatch(f"operators must share one square shape, got {sorted(dims)}")
    return matrices[0].shape[0]


def _telescoped_residuals(
    f: Function2D,
    a1: SpectralMeasure,
    a2: SpectralMeasure,
    b1: SpectralMeasure,
    b2: SpectralMeasure,
    delta_a: DenseMatrix,
    delta_b: DenseMatrix,
) -> _Residuals:
    """
    f(A1,B1) − f(A2,B2) split as [f(A1,B1) − f(A2,B1)] + [f(A2,B1) − f(A2,B2)].

    The first bracket is the triple integral of 𝔇^[1]f against E_A1 (A1 − A2) E_A2 E_B1,
    the second the one of 𝔇^[2]f against E_A2 E_B1 (B1 − B2) E_B2.
    """
    identity = np.eye(a1.dim, dtype=np.complex128)
    f11 = apply_f(f, a1, b1)
    f21 = apply_f(f, a2, b1)
    f22 = apply_f(f, a2, b2)

    first_rhs = toi_direct(first_divided_difference_table(f, a1, a2, b1), a1, a2, b1, delta_a, identity)
    second_rhs = toi_direct(second_divided_difference_table(f, a2, b1, b2), a2, b1, b2, identity, delta_b)

    lhs = f11 - f22
    return _Residuals(
        full=_relative(lhs, first_rhs + second_rhs),
        first=_relative(f11 - f21, first_rhs),
        second=_relative(f21 - f22, second_rhs),
        difference=lhs,
    )


def _report(
    identity: IdentityKind,
    dim: int,
    residuals: _Residuals,
    tol: float,
    ratios: dict[str, float] | None = None,
) -> IdentityReport:
    worst = max(residuals.full, residuals.first, residuals.second)
    return IdentityReport(
        identity=identity,
        dim=dim,
        residual=residuals.full,
        first_residual=residuals.first,
        second_residual=residuals.second,
        tolerance=tol,
        verdict=Verdict.PASS if worst <= tol else Verdict.FAIL,
        lipschitz_ratios=ratios or {},
    )


def verify_pair_identity(
    f: Function2D,
    A1: ArrayLike,
    A2: ArrayLike,
    B1: ArrayLike,
    B2: ArrayLike,
    tol: float = DEFAULT_TOLERANCE,
) -> IdentityReport:
    """Perturbation identity for a Hermitian pair; reports the full and both one-sided residuals."""
    a1, a2, b1, b2 = (as_dense(m) for m in (A1, A2, B1, B2))
    dim = _same_dims(a1, a2, b1, b2)
    residuals = _telescoped_residuals(
        f,
        hermitian_measure(a1),
        hermitian_measure(a2),
        hermitian_measure(b1),
        hermitian_measure(b2),
        a1 - a2,
        b1 - b2,
    )
    return _report(IdentityKind.PAIR, dim, residuals, tol)


def verify_unitary_identity(
    f: TrigPoly,
    U1: ArrayLike,
    U2: ArrayLike,
    V1: ArrayLike,
    V2: ArrayLike,
    tol: float = DEFAULT_TOLERANCE,
) -> IdentityReport:
    """Same identity for unitaries, with torus divided differences in ζ and τ."""
    u1, u2, v1, v2 = (as_dense(m) for m in (U1, U2, V1, V2))
    dim = _same_dims(u1, u2, v1, v2)
    residuals = _telescoped_residuals(
        f,
        unitary_measure(u1),
        unitary_measure(u2),
        unitary_measure(v1),
        unitary_measure(v2),
        u1 - u2,
        v1 - v2,
    )
    return _report(IdentityKind.UNITARY, dim, residuals, tol)


def verify_base_point_identity(
    f: Function2D,
    A: ArrayLike,
    B: ArrayLike,
    alpha: float = 0.0,
    beta: float = 0.0,
    tol: float = DEFAULT_TOLERANCE,
    p_list: Sequence[SchattenExponent] = (),
) -> IdentityReport:
    """
    f(A,B) − f(αI,βI) through the scalar base point (αI, βI).

    ``lipschitz_ratios`` maps each requested exponent to
    ‖f(A,B) − f(αI,βI)‖_p / max(‖A − αI‖_p, ‖B − βI‖_p).
    """
    a, b = as_dense(A), as_dense(B)
    dim = _same_dims(a, b)
    identity = np.eye(dim, dtype=np.complex128)
    delta_a = a - alpha * identity
    delta_b = b - beta * identity
    residuals = _telescoped_residuals(
        f,
        hermitian_measure(a),
        scalar_measure(SpectralKind.HERMITIAN, alpha, dim),
        hermitian_measure(b),
        scalar_measure(SpectralKind.HERMITIAN, beta, dim),
        delta_a,
        delta_b,
    )

    ratios: dict[str, float] = {}
    for p in p_list:
        perturbation = max(schatten_norm(delta_a, p), schatten_norm(delta_b, p))
        difference = schatten_norm(residuals.difference, p)
        ratios[format_exponent(p)] = difference / perturbation if perturbation > 0.0 else 0.0
    return _report(IdentityKind.BASE_POINT, dim, residuals, tol, ratios)


def random_identity_trial(
    identity: IdentityKind,
    dim: int,
    rng: np.random.Generator,
    tol: float = DEFAULT_TOLERANCE,
    p_list: Sequence[SchattenExponent] = (),
) -> IdentityReport:
    """One random instance: trig polynomial of degree ≤ 4 (≤ 3 on the torus), spectra in [−π, π]."""
    if identity == IdentityKind.UNITARY:
        f = random_trig_poly(rng, degree=UNITARY_DEGREE)
        unitaries = random_unitary_pairs(dim, rng)
        return verify_unitary_identity(f, unitaries.A1, unitaries.A2, unitaries.B1, unitaries.B2, tol)

    f = random_trig_poly(rng)
    pairs = random_hermitian_pairs(dim, rng)
    if identity == IdentityKind.PAIR:
        return verify_pair_identity(f, pairs.A1, pairs.A2, pairs.B1, pairs.B2, tol)

    alpha, beta = rng.uniform(-math.pi, math.pi, size=2)
    return verify_base_point_identity(f, pairs.A1, pairs.B1, float(alpha), float(beta), tol, p_list)


def run_identity_trials(
    identity: IdentityKind,
    dims: Sequence[int],
    trials: int,
    seed: int,
    tol: float = DEFAULT_TOLERANCE,
    p_list: Sequence[SchattenExponent] = (),
    mapper: TrialMapper = sequential_map,
) -> tuple[list[IdentityReport], IdentitySummary]:
    """Trial i uses dims[i mod len(dims)] and the stream trial_rng(seed, i)."""

    def trial(index: int) -> IdentityReport:
        return random_identity_trial(
            identity, dims[index % len(dims)], trial_rng(seed, index), tol, p_list
        )

    reports = mapper(trial, trials)
    summary = IdentitySummary(
        identity=identity,
        trials=len(reports),
        max_residual=max((r.residual for r in reports), default=0.0),
        max_first_residual=max((r.first_residual for r in reports), default=0.0),
        max_second_residual=max((r.second_residual for r in reports), default=0.0),
        tolerance=tol,
        verdict=Verdict.PASS if all(r.verdict == Verdict.PASS for r in reports) else Verdict.FAIL,
    )
    logger.debug(f"{identity.value}: {trials} trials, max residual {summary.max_residual:.3e}")
    return reports, summary
