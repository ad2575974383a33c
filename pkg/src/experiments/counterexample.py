"""
The DFT family showing that Lipschitz estimates in S_p fail for p > 2.

A1 = Σ 2j P_j and A2 = Σ (2j+1) P_j act diagonally in the standard basis, B = Σ k Q_k is
diagonal in the DFT basis, and f(x, y) = Σ τ_jk φ(x − 2j) φ(y − k) with the Fejér atom φ.
Spectra are integers, so every value of f on them is computed exactly.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.besov.plane import besov_norm_plane_dyadic
from src.core.models.scan_record import ScanRecord
from src.core.models.schatten_report import Verdict
from src.funcalc.atoms import BandLimited, FejerFamily
from src.funcalc.calculus import apply_f_AB
from src.matcore.dense import DenseMatrix, adjoint
from src.matcore.schatten import SchattenExponent, operator_norm, parse_exponent, schatten_norm
from src.matcore.spectral import SpectralKind, SpectralMeasure
from src.utils.logging import get_logger

logger = get_logger(__name__)

GROWTH_RTOL = 1e-9
FAMILY = "counterexample"
SCALED_FAMILY = "counterexample-scaled"


def dft_matrix(N: int) -> DenseMatrix:
    """u_jk = N^{−1/2} exp(2πi jk / N) for j, k = 1..N."""
    index = np.arange(1, N + 1)
    return np.exp(2j * math.pi * np.outer(index, index) / N) / math.sqrt(N)


@dataclass(frozen=True, eq=False)
class CounterexampleInstance:
    N: int
    u: DenseMatrix
    tau: DenseMatrix
    sm_a1: SpectralMeasure
    sm_a2: SpectralMeasure
    sm_b: SpectralMeasure
    f: BandLimited

    @property
    def g_frame(self) -> DenseMatrix:
        return self.sm_a1.frame

    @property
    def h_frame(self) -> DenseMatrix:
        return self.sm_b.frame

    @cached_property
    def A1(self) -> DenseMatrix:
        return np.diag(self.sm_a1.values)

    @cached_property
    def A2(self) -> DenseMatrix:
        return np.diag(self.sm_a2.values)

    @cached_property
    def B(self) -> DenseMatrix:
        return (self.h_frame * self.sm_b.real_values) @ adjoint(self.h_frame)

    def f_A1_B(self) -> DenseMatrix:
        return apply_f_AB(self.f, self.sm_a1, self.sm_b)

    def f_A2_B(self) -> DenseMatrix:
        return apply_f_AB(self.f, self.sm_a2, self.sm_b)

    def difference(self) -> DenseMatrix:
        return self.f_A1_B() - self.f_A2_B()


def build_counterexample(N: int) -> CounterexampleInstance:
    if N < 2:
        raise ValueError(f"the counterexample needs N >= 2, got {N}")
    index = np.arange(1, N + 1, dtype=np.float64)
    u = dft_matrix(N)
    tau = math.sqrt(N) * np.conj(u)
    standard = np.eye(N, dtype=np.complex128)

    f = BandLimited.build(FejerFamily(centers=2.0 * index), FejerFamily(centers=index), tau)
    return CounterexampleInstance(
        N=N,
        u=u,
        tau=tau,
        sm_a1=SpectralMeasure.from_frame(SpectralKind.HERMITIAN, 2.0 * index, standard),
        sm_a2=SpectralMeasure.from_frame(SpectralKind.HERMITIAN, 2.0 * index + 1.0, standard),
        sm_b=SpectralMeasure.from_frame(SpectralKind.HERMITIAN, index, u),
        f=f,
    )


def predicted_ratio(N: int, p: SchattenExponent) -> float:
    """N^{1/2 − 1/p}; √N for the operator norm."""
    return float(N) ** (0.5 - 1.0 / p)


def _verdict(measured: float, predicted: float) -> Verdict:
    if abs(measured - predicted) <= GROWTH_RTOL * max(abs(predicted), 1.0):
        return Verdict.PASS
    return Verdict.FAIL


def measure_growth(
    N_list: Iterable[int],
    p_list: Iterable[SchattenExponent | str],
) -> list[ScanRecord]:
    """‖f(A1,B) − f(A2,B)‖_p / ‖A1 − A2‖_p for every (N, p), against N^{1/2 − 1/p}."""
    exponents = [parse_exponent(p) for p in p_list]
    records: list[ScanRecord] = []
    for N in N_list:
        instance = build_counterexample(N)
        difference = instance.difference()
        perturbation = instance.A1 - instance.A2
        for p in exponents:
            difference_norm = schatten_norm(difference, p)
            perturbation_norm = schatten_norm(perturbation, p)
            measured = difference_norm / perturbation_norm
            predicted = predicted_ratio(N, p)
            records.append(
                ScanRecord(
                    family=FAMILY,
                    N=N,
                    p=p,
                    measured=measured,
                    predicted=predicted,
                    verdict=_verdict(measured, predicted),
                    difference_norm=difference_norm,
                    perturbation_norm=perturbation_norm,
                )
            )
        logger.debug(f"Counterexample N={N}: ‖f(A1,B) − f(A2,B)‖ = {operator_norm(difference):.6g}")
    return records


def _scaled_norms(
    instance: CounterexampleInstance, epsilon: float, p: SchattenExponent
) -> tuple[float, float]:
    f_eps = instance.f.rescaled(epsilon)
    sm_a1, sm_a2, sm_b = (
        SpectralMeasure.from_frame(sm.kind, sm.values * epsilon, sm.frame, sm.labels)
        for sm in (instance.sm_a1, instance.sm_a2, instance.sm_b)
    )
    difference = apply_f_AB(f_eps, sm_a1, sm_b) - apply_f_AB(f_eps, sm_a2, sm_b)
    return schatten_norm(difference, p), epsilon * schatten_norm(instance.A1 - instance.A2, p)


def _dyadic_exponent(epsilon: float) -> int | None:
    mantissa, exponent = math.frexp(epsilon)
    return -(exponent - 1) if mantissa == 0.5 else None


def scaled_counterexample(
    N: int,
    epsilon: float,
    p: SchattenExponent | str = math.inf,
    *,
    check_besov: bool = True,
    instance: CounterexampleInstance | None = None,
) -> ScanRecord:
    """
    The family rescaled by ε: f_ε(εA1, εB) − f_ε(εA2, εB) against ε(A1 − A2).

    For dyadic ε the Besov norm of f_ε is compared with that of f and the relative
    gap is stored in ``besov_residual``.
    """
    if not epsilon > 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    p_value = parse_exponent(p)
    instance = instance or build_counterexample(N)

    difference_norm, perturbation_norm = _scaled_norms(instance, epsilon, p_value)

    besov_residual: float | None = None
    m = _dyadic_exponent(epsilon)
    if check_besov and m is not None:
        reference = besov_norm_plane_dyadic(instance.f)
        rescaled = besov_norm_plane_dyadic(instance.f, m)
        besov_residual = abs(rescaled - reference) / reference

    measured = difference_norm / perturbation_norm
    predicted = predicted_ratio(N, p_value)
    return ScanRecord(
        family=SCALED_FAMILY,
        N=N,
        p=p_value,
        epsilon=epsilon,
        measured=measured,
        predicted=predicted,
        verdict=_verdict(measured, predicted),
        difference_norm=difference_norm,
        perturbation_norm=perturbation_norm,
        besov_residual=besov_residual,
    )


@dataclass(frozen=True)
class HolderWitness:
    N: int
    epsilon: float
    difference_norm: float
    perturbation_norm: float
    constant: float
    exponent: float

    @property
    def holder_bound(self) -> float:
        return self.constant * self.perturbation_norm**self.exponent


def holder_failure_witness(
    constant: float,
    exponent: float,
    N_list: Sequence[int],
) -> HolderWitness | None:
    """
    First N with ‖f_ε(εA1,εB) − f_ε(εA2,εB)‖ > C·‖εA1 − εA2‖^α at ε = N^{−1/2}.

    The difference stays at ε√N = 1 while the perturbation shrinks like N^{−1/2}, so
    a witness exists once N > C^{2/α}. Returns None when the grid is too small.

    The threshold caps what a finite grid can show: with N ≤ 4096 only constants
    C < 64^α are beaten, so C = 10³ has no witness there for any α in (0, 1).
    """
    if not 0.0 < exponent < 1.0:
        raise ValueError(f"Hölder exponent must lie in (0, 1), got {exponent}")
    for N in sorted(N_list):
        epsilon = 1.0 / math.sqrt(N)
        difference_norm, perturbation_norm = _scaled_norms(build_counterexample(N), epsilon, math.inf)
        if difference_norm > constant * perturbation_norm**exponent:
            return HolderWitness(
                N=N,
                epsilon=epsilon,
                difference_norm=difference_norm,
                perturbation_norm=perturbation_norm,
                constant=constant,
                exponent=exponent,
            )
    return None
