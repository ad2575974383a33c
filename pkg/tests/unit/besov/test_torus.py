import math

import numpy as np
import pytest

from src.besov.filters import make_filter
from src.besov.torus import (
    besov_norm_1_inf_1,
    besov_norm_upper,
    lp_decompose_torus,
    max_level,
    sup_norm_estimate,
    torus_masks,
)
from src.core.errors import NotTorusFunction
from src.funcalc.functions import TrigPoly, TrigPoly1D

pytestmark = pytest.mark.unit


def test_masks_sum_to_one_on_lattice_radii() -> None:
    radius = np.array([0.0, 1.0, math.sqrt(2.0), 2.0, math.sqrt(5.0), 3.0, 7.0, 11.5])

    masks = torus_masks(radius, make_filter(), 5)

    np.testing.assert_allclose(masks.sum(axis=0), 1.0, atol=1e-14)
    assert np.all(masks >= -1e-15)


def test_max_level_tracks_largest_frequency() -> None:
    assert max_level(TrigPoly.constant(1.0)) == 0
    assert max_level(TrigPoly.from_terms({(1, 1): 1.0})) == 1
    assert max_level(TrigPoly1D.from_terms({4: 1.0})) == 3


def test_pieces_sum_back_to_the_polynomial() -> None:
    f = TrigPoly.from_terms({(0, 0): 1.0, (1, 1): 0.5, (3, -2): 2.0j, (-7, 5): -1.0})

    decomposition = lp_decompose_torus(f)

    np.testing.assert_allclose(decomposition.total().coeffs, f.coeffs, atol=1e-14)
    assert decomposition.levels[0] == 0


def test_sup_estimate_brackets_the_maximum() -> None:
    f = TrigPoly.from_terms({(1, 0): 1.0, (0, 1): 1.0})

    estimate = sup_norm_estimate(f)

    assert estimate.grid_size == 32
    assert estimate.lower == pytest.approx(2.0)
    assert estimate.upper == pytest.approx(2.0 * (1.0 + 2.0 * math.pi / 32))


def test_sup_estimate_of_univariate_polynomial() -> None:
    estimate = sup_norm_estimate(TrigPoly1D.from_terms({0: 1.0, 1: 1.0}))

    assert estimate.lower == pytest.approx(2.0)
    assert estimate.upper >= estimate.lower


def test_zero_polynomial_has_zero_sup() -> None:
    estimate = sup_norm_estimate(TrigPoly.from_terms({(1, 0): 0.0}))

    assert (estimate.lower, estimate.upper, estimate.grid_size) == (0.0, 0.0, 0)


def test_single_frequency_lands_on_one_level() -> None:
    f = TrigPoly1D.from_terms({4: 1.0})

    assert besov_norm_1_inf_1(f) == pytest.approx(4.0)


def test_constant_norm_is_its_modulus() -> None:
    assert besov_norm_1_inf_1(TrigPoly.constant(-3.0)) == pytest.approx(3.0)


def test_upper_norm_dominates_grid_norm() -> None:
    f = TrigPoly.from_terms({(1, 2): 1.0, (-3, 0): 0.5, (6, 6): 0.25j})

    assert besov_norm_upper(f) >= besov_norm_1_inf_1(f) > 0.0


def test_non_torus_period_is_refused() -> None:
    with pytest.raises(NotTorusFunction):
        lp_decompose_torus(TrigPoly1D.build([1], [1.0], period=1.0))
    with pytest.raises(NotTorusFunction):
        sup_norm_estimate(TrigPoly.build([[1, 0]], [1.0], periods=(2.0, 2.0)))
