from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from src.core.models.run_config import ScanFamily
from src.core.models.scan_record import ScanRecord
from src.core.models.schatten_report import Verdict
from src.divdiff.representations import (
    build_haagerup_like_rep_D1,
    build_haagerup_like_rep_D2,
    build_torus_rep_D1,
    build_torus_rep_D2,
)
from src.experiments.class_c import telescoped_difference
from src.experiments.counterexample import measure_growth
from src.experiments.random_instances import (
    OperatorPairs,
    TrialMapper,
    random_hermitian_pairs,
    random_separable,
    random_trig_poly,
    random_unitary_pairs,
    sequential_map,
    trial_rng,
)
from src.experiments.regime_probe import probe_regime_violation
from src.funcalc.calculus import apply_f
from src.funcalc.functions import Function2D, TrigPoly
from src.matcore.dense import DenseMatrix
from src.matcore.schatten import SchattenExponent, parse_exponent, schatten_norm
from src.matcore.spectral import SpectralMeasure, hermitian_measure, unitary_measure
from src.toi.reps import haagerup_norm_of_rep
from src.utils.logging import get_logger

logger = get_logger(__name__)

BOUND_MARGIN = 1e-9
RANDOM_DEGREE = 4
UNITARY_DEGREE = 3
# spectra of the random Hermitian family stay well inside the sinc node window
HERMITIAN_SPECTRUM = (-math.pi / 2.0, math.pi / 2.0)


@dataclass(frozen=True)
class TrialRatio:
    """Lipschitz ratio of one instance in one exponent, with its own bound if one is known."""

    ratio: float
    bound: float | None = None

    @property
    def within_bound(self) -> bool:
        return self.bound is None or self.ratio <= self.bound * (1.0 + BOUND_MARGIN) + 1e-13


@dataclass(frozen=True)
class _Instance:
    f: Function2D
    pairs: OperatorPairs
    measures: tuple[SpectralMeasure, SpectralMeasure, SpectralMeasure, SpectralMeasure]

    @property
    def difference(self) -> DenseMatrix:
        a1, a2, b1, b2 = self.measures
        return apply_f(self.f, a1, b1) - apply_f(self.f, a2, b2)

    def ratio(self, difference: DenseMatrix, p: SchattenExponent) -> float:
        perturbation = max(
            schatten_norm(self.pairs.A1 - self.pairs.A2, p),
            schatten_norm(self.pairs.B1 - self.pairs.B2, p),
        )
        return schatten_norm(difference, p) / perturbation if perturbation > 0.0 else 0.0


def _hermitian_instance(f: Function2D, pairs: OperatorPairs) -> _Instance:
    measures = tuple(hermitian_measure(m) for m in (pairs.A1, pairs.A2, pairs.B1, pairs.B2))
    return _Instance(f=f, pairs=pairs, measures=measures)  # type: ignore[arg-type]


def _unitary_instance(f: TrigPoly, pairs: OperatorPairs) -> _Instance:
    measures = tuple(unitary_measure(m) for m in (pairs.A1, pairs.A2, pairs.B1, pairs.B2))
    return _Instance(f=f, pairs=pairs, measures=measures)  # type: ignore[arg-type]


def _in_duality_regime(p: SchattenExponent) -> bool:
    return 1.0 <= p <= 2.0


def _sinc_bound(instance: _Instance) -> float:
    """
    Factor-norm products of the first-kind representation of 𝔇^[1]f on (A1, A2, B1) and
    the second-kind one of 𝔇^[2]f on (A2, B1, B2); their sum bounds the ratio for p ∈ [1, 2].
    """
    a1, a2, b1, b2 = instance.measures
    sigma = instance.f.bandlimit or 0.0
    first = build_haagerup_like_rep_D1(instance.f, sigma, a1, a2, b1)
    second = build_haagerup_like_rep_D2(instance.f, sigma, a2, b1, b2)
    return haagerup_norm_of_rep(first) + haagerup_norm_of_rep(second)


def _torus_bound(instance: _Instance) -> float:
    a1, a2, b1, b2 = instance.measures
    f = instance.f
    if not isinstance(f, TrigPoly):
        raise TypeError("torus bounds need a trigonometric polynomial")
    return haagerup_norm_of_rep(build_torus_rep_D1(f, a1, a2, b1)) + haagerup_norm_of_rep(
        build_torus_rep_D2(f, a2, b1, b2)
    )


def _random_trial(
    build: Callable[[np.random.Generator, int], _Instance],
    bound: Callable[[_Instance], float],
    dim: int,
    rng: np.random.Generator,
    exponents: Sequence[SchattenExponent],
) -> list[TrialRatio]:
    instance = build(rng, dim)
    difference = instance.difference
    duality_bound = bound(instance) if any(_in_duality_regime(p) for p in exponents) else None
    return [
        TrialRatio(
            ratio=instance.ratio(difference, p),
            bound=duality_bound if _in_duality_regime(p) else None,
        )
        for p in exponents
    ]


def _random_trigpoly(rng: np.random.Generator, dim: int) -> _Instance:
    f = random_trig_poly(rng, degree=RANDOM_DEGREE)
    return _hermitian_instance(f, random_hermitian_pairs(dim, rng, *HERMITIAN_SPECTRUM))


def _unitary_trigpoly(rng: np.random.Generator, dim: int) -> _Instance:
    f = random_trig_poly(rng, degree=UNITARY_DEGREE)
    return _unitary_instance(f, random_unitary_pairs(dim, rng))


def _class_c_trial(
    dim: int, rng: np.random.Generator, exponents: Sequence[SchattenExponent]
) -> list[TrialRatio]:
    """Bounds come from the telescoped factorization estimate, valid for p ≥ 1."""
    f = random_separable(rng)
    instance = _hermitian_instance(f, random_hermitian_pairs(dim, rng))
    difference = instance.difference
    pairs = instance.pairs
    ratios: list[TrialRatio] = []
    for p in exponents:
        ratio = instance.ratio(difference, p)
        bound: float | None = None
        if p >= 1.0:
            step = max(
                schatten_norm(pairs.A1 - pairs.A2, p),
                schatten_norm(pairs.B1 - pairs.B2, p),
            )
            telescope = telescoped_difference(f, *instance.measures, p)
            bound = telescope.bound / step if step > 0.0 else 0.0
        ratios.append(TrialRatio(ratio=ratio, bound=bound))
    return ratios


def _trial_function(
    family: ScanFamily, exponents: Sequence[SchattenExponent]
) -> Callable[[int, np.random.Generator], list[TrialRatio]]:
    if family == ScanFamily.RANDOM_TRIGPOLY:
        return lambda dim, rng: _random_trial(_random_trigpoly, _sinc_bound, dim, rng, exponents)
    if family == ScanFamily.UNITARY_TRIGPOLY:
        return lambda dim, rng: _random_trial(_unitary_trigpoly, _torus_bound, dim, rng, exponents)
    if family == ScanFamily.CLASS_C:
        return lambda dim, rng: _class_c_trial(dim, rng, exponents)
    raise ValueError(f"{family.value} is not a random scan family")


def lipschitz_scan(
    family: ScanFamily | str,
    p_list: Sequence[SchattenExponent | str],
    N_list: Sequence[int],
    trials: int = 1,
    seed: int = 0x5EED,
    mapper: TrialMapper = sequential_map,
) -> list[ScanRecord]:
    """
    Lipschitz ratios ‖f(A1,B1) − f(A2,B2)‖_p / max(‖A1 − A2‖_p, ‖B1 − B2‖_p) over (N, p).

    The counterexample family reproduces the exact growth law, and the regime-probe
    family measures it in the dual exponents p' of p ∈ [1, 2) against the bound such
    a p would declare (see probe_regime_violation). Random families draw
    ``trials`` instances per size N from trial_rng(seed, N, t), share them across
    exponents and report the largest ratio; where a per-trial bound exists the verdict
    passes iff every trial stays below its own bound.
    """
    family = ScanFamily(family)
    exponents = [parse_exponent(p) for p in p_list]
    if family == ScanFamily.COUNTEREXAMPLE:
        return measure_growth(N_list, exponents)
    if family == ScanFamily.REGIME_PROBE:
        return probe_regime_violation(N_list, exponents)

    run_trial = _trial_function(family, exponents)

    def trial(index: int) -> list[TrialRatio]:
        N = N_list[index // trials]
        return run_trial(N, trial_rng(seed, N, index % trials))

    outcomes = mapper(trial, len(N_list) * trials)

    records: list[ScanRecord] = []
    for size_index, N in enumerate(N_list):
        batch = outcomes[size_index * trials : (size_index + 1) * trials]
        for p_index, p in enumerate(exponents):
            ratios = [outcome[p_index] for outcome in batch]
            bounds = [r.bound for r in ratios if r.bound is not None]
            has_bounds = len(bounds) == len(ratios)
            if has_bounds:
                verdict = Verdict.PASS if all(r.within_bound for r in ratios) else Verdict.FAIL
            else:
                verdict = Verdict.NA
            records.append(
                ScanRecord(
                    family=family.value,
                    N=N,
                    p=p,
                    measured=max(r.ratio for r in ratios),
                    bound=max(bounds) if has_bounds else None,
                    verdict=verdict,
                )
            )
    logger.debug(f"{family.value} scan: {len(records)} records from {len(outcomes)} trials")
    return records


def fit_loglog_slope(xs: ArrayLike, ys: ArrayLike) -> float:
    """Least-squares slope of log y against log x; nonpositive values are dropped."""
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    keep = (x > 0.0) & (y > 0.0) & np.isfinite(x) & np.isfinite(y)
    if np.unique(x[keep]).size < 2:
        return 0.0
    slope, _ = np.polyfit(np.log(x[keep]), np.log(y[keep]), 1)
    return float(slope)


def growth_slopes(records: Sequence[ScanRecord]) -> dict[tuple[str, float], float]:
    """Log-log slope of the measured ratio against N for every (family, p)."""
    groups: dict[tuple[str, float], list[ScanRecord]] = {}
    for record in records:
        groups.setdefault((record.family, record.p), []).append(record)
    return {
        key: fit_loglog_slope([r.N for r in group], [r.measured for r in group])
        for key, group in groups.items()
    }
