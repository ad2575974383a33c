"""
Schatten-class bound audits for triple operator integrals.

Each bound kind names one inequality between ‖W‖ in some Schatten class and the
representation norm times norms of T and R. The audit refuses exponents outside the
range where the inequality is known to hold instead of reporting a vacuous pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from numpy.typing import ArrayLike

from src.core.errors import RegimeMismatch, UnsupportedRepresentation
from src.core.models.schatten_report import BoundKind, SchattenReport, Verdict
from src.matcore.dense import as_dense
from src.matcore.schatten import (
    SchattenExponent,
    format_exponent,
    harmonic_exponent,
    operator_norm,
    parse_exponent,
    schatten_norm,
)
from src.matcore.spectral import SpectralMeasure
from src.toi.evaluators import toi_haagerup, toi_haagerup_like_1, toi_haagerup_like_2
from src.toi.reps import (
    HaagerupLikeRep1,
    HaagerupLikeRep2,
    HaagerupRep,
    ProjectiveRep,
    TensorRep,
    embed_projective,
    haagerup_norm_of_rep,
)

DEFAULT_MARGIN = 1e-9
DEFAULT_ATOL = 1e-13
EXPONENT_TOL = 1e-12


@dataclass(frozen=True)
class AuditTolerance:
    margin: float = DEFAULT_MARGIN
    atol: float = DEFAULT_ATOL

    def admits(self, measured: float, bound: float) -> bool:
        return measured <= bound * (1.0 + self.margin) + self.atol


@dataclass(frozen=True)
class _Regime:
    r: float
    t_exponent: float
    r_exponent: float


def _haagerup_regime(kind: BoundKind, p: float, q: float | None) -> _Regime:
    if kind in (BoundKind.HAAGERUP_RIGHT_HS, BoundKind.HAAGERUP_LEFT_HS):
        if abs(p - 2.0) > EXPONENT_TOL:
            raise RegimeMismatch(f"{kind.value} is a Hilbert-Schmidt bound, got p={format_exponent(p)}")
        if kind == BoundKind.HAAGERUP_RIGHT_HS:
            return _Regime(r=2.0, t_exponent=math.inf, r_exponent=2.0)
        return _Regime(r=2.0, t_exponent=2.0, r_exponent=math.inf)

    if kind in (BoundKind.HAAGERUP_RIGHT, BoundKind.HAAGERUP_LEFT):
        if p < 2.0:
            raise RegimeMismatch(f"{kind.value} needs p >= 2, got p={format_exponent(p)}")
        if kind == BoundKind.HAAGERUP_RIGHT:
            return _Regime(r=p, t_exponent=math.inf, r_exponent=p)
        return _Regime(r=p, t_exponent=p, r_exponent=math.inf)

    if q is None:
        raise RegimeMismatch(f"{kind.value} needs both p and q")
    if 1.0 / p + 1.0 / q > 0.5 + EXPONENT_TOL:
        raise RegimeMismatch(
            f"{kind.value} needs 1/p + 1/q <= 1/2, got p={format_exponent(p)}, q={format_exponent(q)}"
        )
    return _Regime(r=harmonic_exponent(p, q), t_exponent=p, r_exponent=q)


def _first_kind_regime(p: float, q: float | None) -> _Regime:
    if not 1.0 <= p <= 2.0:
        raise RegimeMismatch(f"first-kind bounds need T in S_p with p in [1, 2], got {format_exponent(p)}")
    if q is None:
        return _Regime(r=p, t_exponent=p, r_exponent=math.inf)
    if 1.0 / p + 1.0 / q > 1.0 + EXPONENT_TOL:
        raise RegimeMismatch(f"first-kind bounds need 1/p + 1/q <= 1, got {format_exponent(p)}, {format_exponent(q)}")
    return _Regime(r=harmonic_exponent(p, q), t_exponent=p, r_exponent=q)


def _second_kind_regime(p: float, q: float | None) -> _Regime:
    if q is None:
        # T bounded, R in S_p
        if not 1.0 <= p <= 2.0:
            raise RegimeMismatch(f"second-kind bounds need R in S_p with p in [1, 2], got {format_exponent(p)}")
        return _Regime(r=p, t_exponent=math.inf, r_exponent=p)
    if p < 1.0 or not 1.0 <= q <= 2.0:
        raise RegimeMismatch(
            f"second-kind bounds need p >= 1 and q in [1, 2], got {format_exponent(p)}, {format_exponent(q)}"
        )
    if 1.0 / p + 1.0 / q > 1.0 + EXPONENT_TOL:
        raise RegimeMismatch(f"second-kind bounds need 1/p + 1/q <= 1, got {format_exponent(p)}, {format_exponent(q)}")
    return _Regime(r=harmonic_exponent(p, q), t_exponent=p, r_exponent=q)


def _norm(matrix: ArrayLike, exponent: float) -> float:
    dense = as_dense(matrix)
    return operator_norm(dense) if math.isinf(exponent) else schatten_norm(dense, exponent)


def audit_schatten_bounds(
    kind: BoundKind | str,
    rep: TensorRep,
    sm1: SpectralMeasure,
    sm2: SpectralMeasure,
    sm3: SpectralMeasure,
    T: ArrayLike,
    R: ArrayLike,
    p: SchattenExponent | str,
    q: SchattenExponent | str | None = None,
    *,
    context: str = "",
    tolerance: AuditTolerance | None = None,
) -> SchattenReport:
    """
    measured = ‖W‖_{S_r}; bound = (factor-norm product) · ‖T‖_{S_a} · ‖R‖_{S_b}.

    Haagerup kinds accept Haagerup and projective representations; the first and
    second kinds need the matching Haagerup-like representation.
    """
    kind = BoundKind(kind)
    if kind == BoundKind.CLASS_C:
        raise UnsupportedRepresentation("class-c estimates are audited by class_C_check, not by a tensor bound")
    tolerance = tolerance or AuditTolerance()
    p_value = parse_exponent(p)
    q_value = None if q is None else parse_exponent(q)

    if kind == BoundKind.FIRST_KIND:
        if not isinstance(rep, HaagerupLikeRep1):
            raise UnsupportedRepresentation(f"{kind.value} audits need a first-kind representation")
        regime = _first_kind_regime(p_value, q_value)
        W = toi_haagerup_like_1(rep, sm1, sm2, sm3, T, R, regime.t_exponent)
    elif kind == BoundKind.SECOND_KIND:
        if not isinstance(rep, HaagerupLikeRep2):
            raise UnsupportedRepresentation(f"{kind.value} audits need a second-kind representation")
        regime = _second_kind_regime(p_value, q_value)
        W = toi_haagerup_like_2(rep, sm1, sm2, sm3, T, R, regime.r_exponent)
    else:
        if isinstance(rep, ProjectiveRep):
            rep = embed_projective(rep)
        if not isinstance(rep, HaagerupRep):
            raise UnsupportedRepresentation(f"{kind.value} audits need a Haagerup representation")
        regime = _haagerup_regime(kind, p_value, q_value)
        W = toi_haagerup(rep, sm1, sm2, sm3, T, R)

    measured = _norm(W, regime.r)
    bound = haagerup_norm_of_rep(rep) * _norm(T, regime.t_exponent) * _norm(R, regime.r_exponent)
    verdict = Verdict.PASS if tolerance.admits(measured, bound) else Verdict.FAIL
    return SchattenReport(
        context=context or kind.value,
        kind=kind,
        p=p_value,
        q=q_value,
        r=regime.r,
        measured=measured,
        bound=bound,
        verdict=verdict,
    )
