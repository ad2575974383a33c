from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from src.core.models.schatten_report import BoundKind, SchattenReport
from src.divdiff.representations import (
    DEFAULT_MARGIN_PI,
    build_haagerup_like_rep_D1,
    build_haagerup_like_rep_D2,
)
from src.experiments.class_c import DEFAULT_AUDIT_CONSTANT, class_C_check
from src.experiments.random_instances import (
    TrialMapper,
    random_haagerup_rep,
    random_hermitian_pairs,
    random_projective_rep,
    random_separable,
    random_trig_poly,
    sequential_map,
    trial_rng,
)
from src.matcore.random_matrices import random_hermitian_with_spectrum, random_matrix
from src.matcore.schatten import SchattenExponent, parse_exponent
from src.matcore.spectral import SpectralMeasure, hermitian_measure
from src.toi.audits import AuditTolerance, audit_schatten_bounds
from src.toi.reps import TensorRep
from src.utils.logging import get_logger

logger = get_logger(__name__)

AUDIT_SPECTRUM = (-math.pi / 2.0, math.pi / 2.0)


def _random_measures(
    dim: int, rng: np.random.Generator
) -> tuple[SpectralMeasure, SpectralMeasure, SpectralMeasure]:
    first, second, third = (
        hermitian_measure(random_hermitian_with_spectrum(dim, rng, *AUDIT_SPECTRUM)) for _ in range(3)
    )
    return first, second, third


def _random_rep(
    kind: BoundKind,
    measures: tuple[SpectralMeasure, SpectralMeasure, SpectralMeasure],
    rng: np.random.Generator,
    margin_pi: float,
) -> TensorRep:
    """Divided-difference representations for the two Haagerup-like kinds, random tables otherwise."""
    sm1, sm2, sm3 = measures
    supports = (sm1.support, sm2.support, sm3.support)
    if kind == BoundKind.FIRST_KIND:
        f = random_trig_poly(rng)
        return build_haagerup_like_rep_D1(f, f.bandlimit or 0.0, sm1, sm2, sm3, margin_pi=margin_pi)
    if kind == BoundKind.SECOND_KIND:
        f = random_trig_poly(rng)
        return build_haagerup_like_rep_D2(f, f.bandlimit or 0.0, sm1, sm2, sm3, margin_pi=margin_pi)
    if rng.integers(2):
        return random_projective_rep(supports, rng)
    return random_haagerup_rep(supports, rng)


def _class_c_reports(
    dim: int,
    rng: np.random.Generator,
    exponents: Sequence[SchattenExponent],
    context: str,
    audit_constant: float,
) -> list[SchattenReport]:
    f = random_separable(rng)
    pairs = random_hermitian_pairs(dim, rng)
    reports: list[SchattenReport] = []
    for p in exponents:
        check = class_C_check(
            f, pairs.A1, pairs.A2, pairs.B1, pairs.B2, p, audit_constant=audit_constant
        )
        reports.append(
            SchattenReport(
                context=context,
                kind=BoundKind.CLASS_C,
                p=p,
                r=p,
                measured=check.measured,
                bound=audit_constant * check.estimate,
                verdict=check.verdict,
            )
        )
    return reports


def random_audit_trial(
    kind: BoundKind,
    dim: int,
    rng: np.random.Generator,
    exponents: Sequence[SchattenExponent],
    q: SchattenExponent | None = None,
    *,
    context: str = "",
    tolerance: AuditTolerance | None = None,
    margin_pi: float = DEFAULT_MARGIN_PI,
    audit_constant: float = DEFAULT_AUDIT_CONSTANT,
) -> list[SchattenReport]:
    if kind == BoundKind.CLASS_C:
        return _class_c_reports(dim, rng, exponents, context, audit_constant)

    measures = _random_measures(dim, rng)
    rep = _random_rep(kind, measures, rng, margin_pi)
    T = random_matrix(dim, dim, rng)
    R = random_matrix(dim, dim, rng)
    return [
        audit_schatten_bounds(kind, rep, *measures, T, R, p, q, context=context, tolerance=tolerance)
        for p in exponents
    ]


def run_audit_trials(
    kind: BoundKind | str,
    dims: Sequence[int],
    trials: int,
    p_list: Sequence[SchattenExponent | str],
    q: SchattenExponent | str | None = None,
    seed: int = 0x5EED,
    *,
    tolerance: AuditTolerance | None = None,
    margin_pi: float = DEFAULT_MARGIN_PI,
    audit_constant: float = DEFAULT_AUDIT_CONSTANT,
    mapper: TrialMapper = sequential_map,
) -> list[SchattenReport]:
    """
    Randomized audits of one bound kind: trial i runs on dims[i mod len(dims)] with the
    stream trial_rng(seed, i). Requests outside the kind's exponent regime are refused
    with RegimeMismatch before any result is reported.
    """
    kind = BoundKind(kind)
    exponents = [parse_exponent(p) for p in p_list]
    q_value = None if q is None else parse_exponent(q)

    def trial(index: int) -> list[SchattenReport]:
        dim = dims[index % len(dims)]
        return random_audit_trial(
            kind,
            dim,
            trial_rng(seed, index),
            exponents,
            q_value,
            context=f"trial={index} dim={dim}",
            tolerance=tolerance,
            margin_pi=margin_pi,
            audit_constant=audit_constant,
        )

    reports = [report for batch in mapper(trial, trials) for report in batch]
    logger.debug(f"{kind.value}: {len(reports)} audit reports from {trials} trials")
    return reports
