from collections.abc import Callable
from typing import TypeVar

import numpy as np
import pytest

from src.core.errors import DimensionMismatch
from src.core.models.identity_report import IdentityKind
from src.core.models.schatten_report import Verdict
from src.experiments.identities import (
    run_identity_trials,
    verify_base_point_identity,
    verify_pair_identity,
    verify_unitary_identity,
)
from src.experiments.random_instances import random_hermitian_pairs, random_trig_poly, random_unitary_pairs
from src.funcalc.functions import monomial

pytestmark = pytest.mark.unit

T = TypeVar("T")


def reversed_map(trial: Callable[[int], T], count: int) -> list[T]:
    results = {index: trial(index) for index in reversed(range(count))}
    return [results[index] for index in range(count)]


def test_pair_identity_holds_for_trig_poly(rng: np.random.Generator) -> None:
    f = random_trig_poly(rng)
    pairs = random_hermitian_pairs(4, rng)

    report = verify_pair_identity(f, pairs.A1, pairs.A2, pairs.B1, pairs.B2)

    assert report.identity == IdentityKind.PAIR
    assert report.verdict == Verdict.PASS
    assert report.max_residual < 1e-10


def test_pair_identity_holds_for_product(rng: np.random.Generator) -> None:
    pairs = random_hermitian_pairs(3, rng)

    report = verify_pair_identity(monomial(1, 1), pairs.A1, pairs.A2, pairs.B1, pairs.B2)

    assert report.max_residual < 1e-12


def test_unitary_identity_holds(rng: np.random.Generator) -> None:
    f = random_trig_poly(rng, degree=3)
    pairs = random_unitary_pairs(3, rng)

    report = verify_unitary_identity(f, pairs.A1, pairs.A2, pairs.B1, pairs.B2)

    assert report.verdict == Verdict.PASS
    assert report.max_residual < 1e-10


def test_base_point_identity_reports_lipschitz_ratios(rng: np.random.Generator) -> None:
    f = random_trig_poly(rng)
    pairs = random_hermitian_pairs(3, rng)

    report = verify_base_point_identity(f, pairs.A1, pairs.B1, 0.5, -0.25, p_list=[2.0, float("inf")])

    assert report.identity == IdentityKind.BASE_POINT
    assert report.verdict == Verdict.PASS
    assert set(report.lipschitz_ratios) == {"2", "inf"}
    assert all(ratio > 0.0 for ratio in report.lipschitz_ratios.values())


def test_base_point_at_the_operators_themselves_is_trivial() -> None:
    f = monomial(1, 1)
    a = 0.5 * np.eye(2)
    b = -np.eye(2)

    report = verify_base_point_identity(f, a, b, 0.5, -1.0, p_list=[2.0])

    assert report.residual == pytest.approx(0.0, abs=1e-15)
    assert report.lipschitz_ratios == {"2": 0.0}


def test_operators_must_share_one_shape(rng: np.random.Generator) -> None:
    with pytest.raises(DimensionMismatch):
        verify_pair_identity(monomial(1, 1), np.eye(2), np.eye(2), np.eye(3), np.eye(2))


@pytest.mark.parametrize("identity", list(IdentityKind))
def test_trials_are_deterministic_and_order_free(identity: IdentityKind) -> None:
    reports, summary = run_identity_trials(identity, [2, 3], 3, seed=11)
    shuffled, _ = run_identity_trials(identity, [2, 3], 3, seed=11, mapper=reversed_map)

    assert [r.dim for r in reports] == [2, 3, 2]
    assert [r.residual for r in reports] == [r.residual for r in shuffled]
    assert summary.trials == 3
    assert summary.verdict == Verdict.PASS
    assert summary.max_residual == max(r.residual for r in reports)


def test_base_point_trials_carry_requested_exponents() -> None:
    reports, _ = run_identity_trials(IdentityKind.BASE_POINT, [3], 2, seed=5, p_list=[1.0, 4.0])

    assert all(set(report.lipschitz_ratios) == {"1", "4"} for report in reports)


@pytest.mark.slow
@pytest.mark.parametrize("identity", list(IdentityKind))
def test_two_hundred_random_instances_satisfy_the_identity(identity: IdentityKind) -> None:
    reports, summary = run_identity_trials(identity, [2, 3, 4, 5, 6, 7, 8], 200, seed=0x5EED)

    assert summary.trials == 200
    assert summary.verdict == Verdict.PASS
    assert summary.max_residual <= 1e-8
    assert summary.max_first_residual <= 1e-8
    assert summary.max_second_residual <= 1e-8
    assert max(r.dim for r in reports) == 8
