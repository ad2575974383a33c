"""
Lipschitz estimates for functions given by two separable factorizations.

f(x, y) = Σ φ_n(x) ψ_n(y) = Σ φ♯_n(x) ψ♯_n(y); the class norm charges the Besov norm to
the x-factor of the first sum and to the y-factor of the second.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from numpy.typing import ArrayLike

from src.besov.filters import LPFilterBank
from src.besov.torus import DEFAULT_OVERSAMPLING, besov_norm_1_inf_1, sup_norm_estimate
from src.core.errors import InvalidExponent, MissingFactorization
from src.core.models.class_c_report import ClassCReport
from src.core.models.schatten_report import Verdict
from src.funcalc.calculus import apply_f_AB
from src.funcalc.functions import Function1D, SeparableSum, TrigPoly1D
from src.matcore.dense import DenseMatrix, as_dense
from src.matcore.schatten import SchattenExponent, operator_norm, parse_exponent, schatten_norm
from src.matcore.spectral import SpectralMeasure, hermitian_measure
from src.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_AUDIT_CONSTANT = 16.0
TELESCOPE_MARGIN = 1e-9

Factors = Sequence[tuple[Function1D, Function1D]]


def _dual_terms(f: SeparableSum) -> Factors:
    if f.dual_terms is None:
        raise MissingFactorization("class-C estimates need the second factorization of f")
    return f.dual_terms


def _as_trig(factor: Function1D) -> TrigPoly1D:
    if not isinstance(factor, TrigPoly1D):
        raise MissingFactorization(f"class-C factors must be trigonometric polynomials, got {type(factor).__name__}")
    return factor


def class_c_norm(
    f: SeparableSum,
    bank: LPFilterBank | None = None,
    oversampling: int = DEFAULT_OVERSAMPLING,
) -> float:
    """Σ ‖φ_n‖_B ‖ψ_n‖_∞ + Σ ‖φ♯_n‖_∞ ‖ψ♯_n‖_B with B = B¹_{∞,1} on the circle."""
    dual = _dual_terms(f)
    first = (
        besov_norm_1_inf_1(_as_trig(phi), bank, oversampling)
        * sup_norm_estimate(_as_trig(psi), oversampling).upper
        for phi, psi in f.terms
    )
    second = (
        sup_norm_estimate(_as_trig(phi), oversampling).upper
        * besov_norm_1_inf_1(_as_trig(psi), bank, oversampling)
        for phi, psi in dual
    )
    return math.fsum(first) + math.fsum(second)


def _function_of(factor: Function1D, measure: SpectralMeasure) -> DenseMatrix:
    return measure.function_of(factor.evaluate(measure.real_values))


@dataclass(frozen=True)
class TelescopedDifference:
    measured: float
    bound: float


def telescoped_difference(
    f: SeparableSum,
    a1: SpectralMeasure,
    a2: SpectralMeasure,
    b1: SpectralMeasure,
    b2: SpectralMeasure,
    p: SchattenExponent,
) -> TelescopedDifference:
    """
    f(A1,B1) − f(A2,B2) = Σ (φ_n(A1) − φ_n(A2)) ψ_n(B1) + Σ φ♯_n(A2) (ψ♯_n(B1) − ψ♯_n(B2)).

    Hölder on every term bounds the S_p norm of the difference.
    """
    difference = apply_f_AB(f, a1, b1) - apply_f_AB(f, a2, b2)
    first = (
        schatten_norm(_function_of(phi, a1) - _function_of(phi, a2), p) * operator_norm(_function_of(psi, b1))
        for phi, psi in f.terms
    )
    second = (
        operator_norm(_function_of(phi, a2)) * schatten_norm(_function_of(psi, b1) - _function_of(psi, b2), p)
        for phi, psi in _dual_terms(f)
    )
    return TelescopedDifference(measured=schatten_norm(difference, p), bound=math.fsum(first) + math.fsum(second))


def class_C_check(
    f: SeparableSum,
    A1: ArrayLike,
    A2: ArrayLike,
    B1: ArrayLike,
    B2: ArrayLike,
    p: SchattenExponent | str = math.inf,
    *,
    audit_constant: float = DEFAULT_AUDIT_CONSTANT,
    bank: LPFilterBank | None = None,
    oversampling: int = DEFAULT_OVERSAMPLING,
) -> ClassCReport:
    """
    ‖f(A1,B1) − f(A2,B2)‖_p against ‖f‖_C (‖A1 − A2‖_p + ‖B1 − B2‖_p).

    Passes when the ratio stays below ``audit_constant`` and the measured norm below the
    telescoped bound.
    """
    p_value = parse_exponent(p)
    if p_value < 1.0:
        raise InvalidExponent(f"class-C estimates need p >= 1, got {p_value}")
    norm = class_c_norm(f, bank, oversampling)
    a1, a2, b1, b2 = (as_dense(m) for m in (A1, A2, B1, B2))
    telescope = telescoped_difference(
        f, hermitian_measure(a1), hermitian_measure(a2), hermitian_measure(b1), hermitian_measure(b2), p_value
    )
    perturbation = schatten_norm(a1 - a2, p_value) + schatten_norm(b1 - b2, p_value)
    estimate = norm * perturbation

    if telescope.measured == 0.0:
        ratio = 0.0
    elif estimate == 0.0:
        ratio = math.inf
    else:
        ratio = telescope.measured / estimate

    within_telescope = telescope.measured <= telescope.bound * (1.0 + TELESCOPE_MARGIN) + 1e-13
    verdict = Verdict.PASS if within_telescope and ratio <= audit_constant else Verdict.FAIL
    logger.debug(f"class-C p={p_value}: ratio {ratio:.4g}, telescoped bound {telescope.bound:.4g}")
    return ClassCReport(
        p=p_value,
        class_norm=norm,
        measured=telescope.measured,
        telescoped_bound=telescope.bound,
        perturbation=perturbation,
        estimate=estimate,
        ratio=ratio,
        audit_constant=audit_constant,
        verdict=verdict,
    )
