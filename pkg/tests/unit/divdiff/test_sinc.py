import math

import numpy as np
import pytest

from src.divdiff.divided import divided_diff_1
from src.divdiff.sinc import (
    SincGrid,
    divdiff_matrix,
    divdiff_tables,
    sinc_expand_D1,
    sinc_tail_bound,
    sinc_weights,
)
from src.funcalc.functions import TrigPoly

pytestmark = pytest.mark.unit


@pytest.fixture
def poly() -> TrigPoly:
    return TrigPoly.from_terms({(1, 0): 1.0, (0, 1): 0.5, (-1, 2): 0.25j})


def test_grid_nodes_and_size() -> None:
    grid = SincGrid(radius=2, sigma=2.0)

    np.testing.assert_allclose(grid.nodes, np.arange(-2, 3) * math.pi / 2.0)
    assert grid.size == 5


def test_grid_rejects_invalid_parameters() -> None:
    with pytest.raises(ValueError):
        SincGrid(radius=-1)
    with pytest.raises(ValueError):
        SincGrid(radius=1, sigma=0.0)


def test_covering_grid_contains_inflated_points() -> None:
    grid = SincGrid.covering([0.5, -2.0], sigma=1.0, margin_pi=1.0)

    assert grid.radius == 2
    assert grid.covers([0.5, -2.0])
    assert not grid.covers([0.5, -2.0], margin=2 * math.pi)


def test_weights_are_one_hot_on_nodes() -> None:
    weights = sinc_weights(2 * math.pi, 3)

    expected = np.zeros(7)
    expected[5] = 1.0
    np.testing.assert_array_equal(weights, expected)


def test_weights_for_point_arrays() -> None:
    weights = sinc_weights(np.array([0.0, 0.4, 1.1]), 4)

    assert weights.shape == (3, 9)
    assert weights[1, 4] == pytest.approx(math.sin(0.4) / 0.4)


def test_squared_weights_respect_the_tail_bound() -> None:
    x, J = 0.7, 10

    deficit = 1.0 - float(np.sum(sinc_weights(x, J) ** 2))

    assert 0.0 <= deficit <= sinc_tail_bound(x, J)
    assert sinc_tail_bound(40.0, 10) == math.inf


def test_divdiff_matrix_diagonal_is_the_partial(poly: TrigPoly) -> None:
    divided = divdiff_matrix(poly, -0.4, 3)

    np.testing.assert_allclose(np.diag(divided.entries), divided.derivatives)
    assert np.all(np.diag(divided.off_diagonal) == 0.0)
    assert divided.norm() <= 3.0 * poly.sup_bound()


def test_tables_stack_one_matrix_per_y(poly: TrigPoly) -> None:
    grid = SincGrid(radius=3)

    tables = divdiff_tables(poly, [0.1, -0.8], grid)

    assert tables.shape == (2, 7, 7)
    np.testing.assert_allclose(tables[1], divdiff_matrix(poly, -0.8, 3).entries, atol=1e-14)


def test_fast_expansion_matches_explicit_double_sum(poly: TrigPoly) -> None:
    x1, x2, y, J = 0.3, -1.2, 0.5, 12
    matrix = divdiff_matrix(poly, y, J).entries

    explicit = sinc_weights(x1, J) @ matrix @ sinc_weights(x2, J)

    assert sinc_expand_D1(poly, x1, x2, y, J) == pytest.approx(explicit, abs=1e-12)


def test_expansion_is_exact_on_nodes(poly: TrigPoly) -> None:
    x1, x2, y = 2 * math.pi, -math.pi, 0.5

    expanded = sinc_expand_D1(poly, x1, x2, y, 5)

    assert expanded == pytest.approx(complex(divided_diff_1(poly, x1, x2, y)), abs=1e-12)


@pytest.mark.parametrize("x", [0.0, 0.7, math.pi / 2, 3.0, 10.0])
def test_truncated_series_error_is_within_the_tail_bound(x: float) -> None:
    half_band = TrigPoly.from_terms({(1, 0): 1.0, (0, 1): 0.5, (-1, 2): 0.25j}, periods=(4 * math.pi, 2 * math.pi))
    x2, y = -1.2, 0.5
    exact = complex(divided_diff_1(half_band, x, x2, y))

    for J in (8, 32, 128):
        error = abs(sinc_expand_D1(half_band, x, x2, y, J) - exact)
        allowance = 3.0 * half_band.sup_bound() * (
            math.sqrt(sinc_tail_bound(x, J)) + math.sqrt(sinc_tail_bound(x2, J))
        )
        assert error <= allowance


@pytest.mark.slow
@pytest.mark.parametrize("J", [100, 1000])
@pytest.mark.parametrize("x", [0.0, 0.3, math.pi / 2, 2.9, 25.0])
def test_partition_of_unity_deficit_at_large_radius(J: int, x: float) -> None:
    deficit = 1.0 - float(np.sum(sinc_weights(x, J) ** 2))

    assert -1e-12 <= deficit <= sinc_tail_bound(x, J)


@pytest.mark.slow
def test_partition_of_unity_at_half_pi() -> None:
    assert abs(float(np.sum(sinc_weights(math.pi / 2, 1000) ** 2)) - 1.0) <= 1e-3


@pytest.mark.slow
def test_expansion_of_exponential_at_large_radius() -> None:
    f = TrigPoly.from_terms({(1, 0): 1.0})

    off_node = sinc_expand_D1(f, 0.3, 1.7, 0.0, 2000)
    coincident = sinc_expand_D1(f, 0.5, 0.5, 0.0, 2000)

    assert abs(off_node - complex(divided_diff_1(f, 0.3, 1.7, 0.0))) <= 5e-3
    assert abs(coincident - 1j * np.exp(0.5j)) <= 5e-3


@pytest.mark.slow
def test_expansion_converges_at_least_linearly_in_the_radius() -> None:
    half_band = TrigPoly.from_terms({(1, 0): 1.0}, periods=(4 * math.pi, 2 * math.pi))
    radii = np.array([64, 128, 256, 512, 1024])
    exact = complex(divided_diff_1(half_band, 0.3, 1.7, 0.0))

    errors = np.array([abs(sinc_expand_D1(half_band, 0.3, 1.7, 0.0, int(J)) - exact) for J in radii])
    slope, _ = np.polyfit(np.log(radii), np.log(errors), 1)

    assert np.all(errors > 0.0)
    assert -slope >= 0.9


@pytest.mark.slow
@pytest.mark.parametrize("J", [64, 256, 512])
def test_divdiff_matrix_norm_of_exponential_stays_below_three(J: int) -> None:
    f = TrigPoly.from_terms({(1, 0): 1.0})

    assert divdiff_matrix(f, 0.0, J).norm() <= 3.0
