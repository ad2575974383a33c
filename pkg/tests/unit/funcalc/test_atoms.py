import math

import numpy as np
import pytest

from src.core.errors import DimensionMismatch
from src.funcalc.atoms import (
    BandLimited,
    ExponentialFamily,
    FejerFamily,
    fejer,
    fejer_derivative,
    fejer_transform,
)

pytestmark = pytest.mark.unit


def test_fejer_kernel_interpolates_integers() -> None:
    values = fejer(np.array([-3.0, -1.0, 0.0, 1.0, 2.0]))

    np.testing.assert_array_equal(values, [0.0, 0.0, 1.0, 0.0, 0.0])
    assert fejer(0.5) == pytest.approx((2.0 / math.pi) ** 2)


def test_fejer_derivative_matches_difference_quotient() -> None:
    t, h = 0.3, 1e-6

    quotient = (fejer(t + h) - fejer(t - h)) / (2 * h)

    assert fejer_derivative(t) == pytest.approx(quotient, rel=1e-7)
    assert fejer_derivative(0.0) == 0.0


def test_fejer_transform_is_a_triangle() -> None:
    xi = np.array([0.0, math.pi, -math.pi, 2 * math.pi, 10.0])

    np.testing.assert_allclose(fejer_transform(xi), [1.0, 0.5, 0.5, 0.0, 0.0])


def test_fejer_family_dilation_scales_centers_and_width() -> None:
    family = FejerFamily(centers=np.array([0.0, 1.0, 2.0]), width=1.0)

    dilated = family.dilated(0.25)

    np.testing.assert_allclose(dilated.centers, [0.0, 0.25, 0.5])
    assert dilated.width == 0.25
    assert dilated.bandlimit == pytest.approx(8 * math.pi)
    np.testing.assert_allclose(dilated.values([0.25]).real[:, 0], [0.0, 1.0, 0.0])


def test_exponential_family_values_and_dilation() -> None:
    family = ExponentialFamily(harmonics=np.array([-1, 2]), base=1.0)

    values = family.values([0.5])
    dilated = family.dilated(0.5)

    np.testing.assert_allclose(values[:, 0], np.exp(1j * np.array([-0.5, 1.0])))
    np.testing.assert_allclose(dilated.frequencies, [-2.0, 4.0])
    assert family.bandlimit == 2.0


@pytest.fixture
def band_limited() -> BandLimited:
    left = FejerFamily(centers=np.array([0.0, 1.0]))
    right = ExponentialFamily(harmonics=np.array([1, -1, 3]))
    weights = np.array([[1.0, 0.5j, 0.0], [0.0, -1.0, 0.25]])
    return BandLimited.build(left, right, weights)


def test_band_limited_rejects_wrong_weight_shape() -> None:
    left = FejerFamily(centers=np.array([0.0, 1.0]))
    right = ExponentialFamily(harmonics=np.array([1]))

    with pytest.raises(DimensionMismatch):
        BandLimited.build(left, right, np.ones((1, 1)))


def test_band_limited_grid_matches_pointwise(band_limited: BandLimited) -> None:
    xs = np.array([-0.5, 0.3, 1.7])
    ys = np.array([0.0, 2.1])

    grid = band_limited.evaluate_grid(xs, ys)

    np.testing.assert_allclose(grid, band_limited.evaluate(xs[:, None], ys[None, :]), atol=1e-14)


def test_band_limited_derivative_matches_difference_quotient(band_limited: BandLimited) -> None:
    x, y, h = 0.4, 0.9, 1e-6

    dx = (band_limited(x + h, y) - band_limited(x - h, y)) / (2 * h)
    dy = (band_limited(x, y + h) - band_limited(x, y - h)) / (2 * h)

    assert band_limited.dx(x, y) == pytest.approx(dx, rel=1e-6)
    assert band_limited.dy(x, y) == pytest.approx(dy, rel=1e-6)


def test_band_limited_bounds(band_limited: BandLimited) -> None:
    assert band_limited.bandlimit == pytest.approx(math.hypot(2 * math.pi, 3.0))
    assert band_limited.sup_bound() == pytest.approx(2.75)


def test_rescaling_keeps_the_function_shape(band_limited: BandLimited) -> None:
    epsilon = 0.1
    scaled = band_limited.rescaled(epsilon)

    assert scaled(0.03, -0.07) == pytest.approx(epsilon * band_limited(0.3, -0.7))
    assert scaled.bandlimit == pytest.approx(band_limited.bandlimit / epsilon)


def test_flip_transposes_weights(band_limited: BandLimited) -> None:
    assert band_limited.flipped()(0.9, 0.4) == pytest.approx(band_limited(0.4, 0.9))


def test_lattice_fejer_atoms_sum_to_at_most_one() -> None:
    spaced = FejerFamily(centers=2.0 * np.arange(1, 9))
    off_lattice = FejerFamily(centers=np.array([0.0, 0.5]))
    t = np.linspace(-3.0, 20.0, 2001)

    assert spaced.envelope_bound() == 1.0
    assert spaced.dilated(0.1).envelope_bound() == 1.0
    assert off_lattice.envelope_bound() == 2.0
    assert float(np.max(np.sum(np.abs(spaced.values(t)), axis=0))) <= 1.0 + 1e-12


def test_sup_bound_uses_the_envelope_when_smaller() -> None:
    N = 8
    phases = np.exp(2j * math.pi * np.outer(np.arange(N), np.arange(N)) / N)
    f = BandLimited.build(FejerFamily(centers=2.0 * np.arange(1, N + 1)), FejerFamily(centers=np.arange(1.0, N + 1)), phases)
    x = np.linspace(0.0, 2.0 * N + 2.0, 301)

    assert f.sup_bound() == pytest.approx(1.0)
    assert float(np.max(np.abs(f.evaluate(x[:, None], x[None, :])))) <= f.sup_bound() + 1e-12
