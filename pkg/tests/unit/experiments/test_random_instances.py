import numpy as np
import pytest

from src.experiments.random_instances import (
    random_hermitian_pairs,
    random_separable,
    random_trig_poly,
    random_unitary_pairs,
    sequential_map,
    trial_rng,
)
from src.funcalc.functions import SeparableSum
from src.matcore.dense import adjoint

pytestmark = pytest.mark.unit


def test_trial_streams_are_reproducible_and_independent() -> None:
    first = trial_rng(7, 3).standard_normal(4)
    again = trial_rng(7, 3).standard_normal(4)
    other = trial_rng(7, 4).standard_normal(4)

    np.testing.assert_array_equal(first, again)
    assert not np.allclose(first, other)


def test_random_trig_poly_respects_degree(rng: np.random.Generator) -> None:
    f = random_trig_poly(rng, degree=3, terms=5)

    assert f.is_torus
    assert f.degree_x <= 3
    assert f.degree_y <= 3
    assert f.sup_bound() > 0.0


def test_dual_factorization_represents_the_same_function(rng: np.random.Generator) -> None:
    f = random_separable(rng, rank=2)
    assert f.dual_terms is not None
    dual = SeparableSum.of(f.dual_terms)
    x = np.linspace(-3.0, 3.0, 7)

    np.testing.assert_allclose(dual(x, x[::-1]), f(x, x[::-1]), atol=1e-12)


def test_perturbed_hermitian_pairs_stay_in_window(rng: np.random.Generator) -> None:
    pairs = random_hermitian_pairs(4, rng, -1.0, 1.0, perturbation=1e-3)

    for matrix in (pairs.A1, pairs.A2, pairs.B1, pairs.B2):
        eigenvalues = np.linalg.eigvalsh(matrix)
        assert eigenvalues.min() >= -1.0 - 1e-12
        assert eigenvalues.max() <= 1.0 + 1e-12
    assert np.linalg.norm(pairs.A1 - pairs.A2, 2) <= 2e-3 + 1e-12


def test_perturbed_unitary_pairs_are_unitary(rng: np.random.Generator) -> None:
    pairs = random_unitary_pairs(3, rng, angle=0.1)

    for matrix in (pairs.A2, pairs.B2):
        np.testing.assert_allclose(adjoint(matrix) @ matrix, np.eye(3), atol=1e-12)


def test_sequential_map_keeps_index_order() -> None:
    assert sequential_map(lambda index: index * index, 4) == [0, 1, 4, 9]
