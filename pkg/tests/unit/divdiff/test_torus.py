import numpy as np
import pytest

from src.core.errors import DegreeTooHigh, NotTorusFunction
from src.divdiff.divided import torus_divided_diff_1
from src.divdiff.torus import (
    TorusKernel,
    roots_of_unity,
    torus_divdiff_matrix,
    torus_divdiff_tables,
    torus_expand_D1,
    xi_kernel,
    xi_weights,
)
from src.funcalc.functions import TrigPoly

pytestmark = pytest.mark.unit


@pytest.fixture
def torus_poly() -> TrigPoly:
    return TrigPoly.from_terms({(2, 1): 1.0, (-2, 0): 0.5j, (1, -1): -0.25, (0, 3): 2.0})


def test_roots_of_unity_are_ordered() -> None:
    np.testing.assert_allclose(roots_of_unity(4), [1.0, 1j, -1.0, -1j], atol=1e-15)
    with pytest.raises(ValueError):
        roots_of_unity(0)


def test_kernel_is_one_at_one_and_vanishes_on_other_roots() -> None:
    kernel = TorusKernel(3)

    values = kernel(kernel.roots)

    assert values[0] == pytest.approx(1.0)
    np.testing.assert_allclose(values[1:], 0.0, atol=1e-14)


def test_kernel_matches_closed_form_off_the_roots() -> None:
    n, z = 2, np.exp(0.37j)

    closed = (z ** (n + 1) - z ** (-n)) / ((2 * n + 1) * (z - 1))

    assert xi_kernel(n, z) == pytest.approx(closed)


def test_kernel_refuses_points_off_the_circle() -> None:
    with pytest.raises(ValueError):
        xi_kernel(2, 0.5)


def test_weights_are_one_hot_on_roots() -> None:
    roots = roots_of_unity(5)

    np.testing.assert_allclose(xi_weights(2, roots[3]), np.eye(5)[3], atol=1e-14)


def test_matrix_diagonal_is_complex_derivative(torus_poly: TrigPoly) -> None:
    tau = np.exp(0.8j)
    roots = roots_of_unity(5)

    matrix = torus_divdiff_matrix(torus_poly, tau, 2)

    np.testing.assert_allclose(np.diag(matrix), torus_poly.torus_dzeta(roots, tau), atol=1e-13)


def test_degree_above_n_is_refused(torus_poly: TrigPoly) -> None:
    with pytest.raises(DegreeTooHigh):
        torus_divdiff_matrix(torus_poly, 1.0 + 0j, 1)
    with pytest.raises(DegreeTooHigh):
        torus_divdiff_tables(torus_poly, [1.0 + 0j], 1)


def test_non_torus_poly_is_refused() -> None:
    f = TrigPoly.build([[1, 0]], [1.0], periods=(1.0, 1.0))

    with pytest.raises(NotTorusFunction):
        torus_divdiff_matrix(f, 1.0 + 0j, 2)


def test_expansion_reproduces_divided_difference(torus_poly: TrigPoly) -> None:
    z1, z2, tau = np.exp(0.4j), np.exp(-2.2j), np.exp(1.3j)

    expanded = torus_expand_D1(torus_poly, z1, z2, tau, 2)

    assert expanded == pytest.approx(complex(torus_divided_diff_1(torus_poly, z1, z2, tau)), abs=1e-12)


def test_tables_stack_one_matrix_per_tau(torus_poly: TrigPoly) -> None:
    taus = np.exp(1j * np.array([0.1, 2.5]))

    tables = torus_divdiff_tables(torus_poly, taus, 3)

    assert tables.shape == (2, 7, 7)
    np.testing.assert_allclose(tables[1], torus_divdiff_matrix(torus_poly, taus[1], 3), atol=1e-14)


@pytest.mark.parametrize("n", [1, 2, 4, 8])
def test_matrix_norm_of_monomials_is_2n_plus_1(n: int) -> None:
    for m in {1, n, -n}:
        f = TrigPoly.from_terms({(m, 1): 1.0})

        matrix = torus_divdiff_matrix(f, np.exp(0.3j), n)

        assert np.linalg.norm(matrix, 2) == pytest.approx(2 * n + 1, rel=1e-10)


def test_matrix_norm_grows_at_most_like_2n_plus_1(torus_poly: TrigPoly) -> None:
    coefficient_sum = float(np.sum(np.abs(torus_poly.coeffs)))

    constants = [
        np.linalg.norm(torus_divdiff_matrix(torus_poly, np.exp(1.1j), n), 2) / (2 * n + 1)
        for n in (2, 4, 8, 16)
    ]

    assert max(constants) <= coefficient_sum * (1.0 + 1e-12)


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 5, 8, 16, 33, 64])
def test_kernel_weights_form_a_partition_at_random_points(n: int, rng: np.random.Generator) -> None:
    zeta = np.exp(1j * rng.uniform(-np.pi, np.pi, size=100))

    weights = xi_weights(n, zeta)

    np.testing.assert_allclose(np.sum(np.abs(weights) ** 2, axis=-1), 1.0, atol=1e-12)
    np.testing.assert_allclose(np.sum(weights, axis=-1), 1.0, atol=1e-12)


def test_kernel_normalization_at_fixed_point() -> None:
    weights = xi_weights(8, np.exp(0.37j))

    assert float(np.sum(np.abs(weights) ** 2)) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.slow
def test_expansion_matches_divided_differences_at_random_points(
    torus_poly: TrigPoly, rng: np.random.Generator
) -> None:
    angles = rng.uniform(-np.pi, np.pi, size=(100, 3))

    for n in (3, 8):
        for a1, a2, a3 in angles:
            zeta1, zeta2, tau = np.exp(1j * a1), np.exp(1j * a2), np.exp(1j * a3)
            expanded = torus_expand_D1(torus_poly, zeta1, zeta2, tau, n)
            assert expanded == pytest.approx(complex(torus_divided_diff_1(torus_poly, zeta1, zeta2, tau)), abs=1e-10)
