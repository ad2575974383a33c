import numpy as np
import pytest

from src.core.errors import DimensionMismatch, NonFiniteEntries, NotNormal, SpectralKindMismatch
from src.matcore.random_matrices import random_hermitian, random_unitary
from src.matcore.spectral import (
    SpectralKind,
    SpectralMeasure,
    check_invariants,
    hermitian_measure,
    reconstruct,
    require_kind,
    scalar_measure,
    unitary_measure,
)

pytestmark = pytest.mark.unit


def test_degenerate_eigenvalues_share_one_projector() -> None:
    matrix = np.diag([1.0, 2.0, 2.0, 3.0])

    measure = hermitian_measure(matrix)

    np.testing.assert_allclose(measure.real_values, [1.0, 2.0, 3.0])
    assert np.count_nonzero(measure.labels == 1) == 2
    assert check_invariants(measure, 1e-12) == []
    np.testing.assert_allclose(reconstruct(measure), matrix, atol=1e-12)


def test_hermitian_measure_reconstructs_random_matrix(rng: np.random.Generator) -> None:
    matrix = random_hermitian(6, rng)

    measure = hermitian_measure(matrix)

    assert measure.size == 6
    assert np.all(np.diff(measure.real_values) > 0.0)
    assert check_invariants(measure, 1e-10) == []
    np.testing.assert_allclose(reconstruct(measure), matrix, atol=1e-12)


def test_function_of_matches_matrix_polynomial(rng: np.random.Generator) -> None:
    matrix = random_hermitian(4, rng)
    measure = hermitian_measure(matrix)

    square = measure.function_of(measure.values**2)

    np.testing.assert_allclose(square, matrix @ matrix, atol=1e-12)


def test_unitary_values_are_ordered_by_argument() -> None:
    angles = np.array([3.0, 1.0, 0.5])
    matrix = np.diag(np.exp(1j * angles))

    measure = unitary_measure(matrix)

    np.testing.assert_allclose(np.angle(measure.values), [0.5, 1.0, 3.0], atol=1e-14)
    np.testing.assert_allclose(reconstruct(measure), matrix, atol=1e-12)


def test_unitary_clusters_wrap_around_the_circle() -> None:
    matrix = np.diag(np.exp(1j * np.array([1e-12, np.pi, -1e-12])))

    measure = unitary_measure(matrix)

    assert measure.size == 2
    assert measure.values[0] == pytest.approx(1.0)
    assert np.count_nonzero(measure.labels == 0) == 2


def test_random_unitary_measure_satisfies_invariants(rng: np.random.Generator) -> None:
    u = random_unitary(5, rng)

    measure = unitary_measure(u)

    assert check_invariants(measure, 1e-10) == []
    np.testing.assert_allclose(np.abs(measure.values), 1.0, atol=1e-14)
    np.testing.assert_allclose(reconstruct(measure), u, atol=1e-12)


def test_non_normal_inputs_are_rejected() -> None:
    nilpotent = np.array([[0.0, 1.0], [0.0, 0.0]])

    with pytest.raises(NotNormal):
        hermitian_measure(nilpotent)
    with pytest.raises(NotNormal):
        unitary_measure(2.0 * np.eye(2))


def test_shape_and_finiteness_errors() -> None:
    with pytest.raises(DimensionMismatch):
        hermitian_measure(np.zeros((2, 3)))
    with pytest.raises(NonFiniteEntries):
        hermitian_measure(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_scalar_measure_is_a_single_point() -> None:
    measure = scalar_measure(SpectralKind.HERMITIAN, 2.0, 3)

    assert measure.size == 1
    np.testing.assert_allclose(reconstruct(measure), 2.0 * np.eye(3))


def test_from_points_round_trip(rng: np.random.Generator) -> None:
    measure = hermitian_measure(random_hermitian(4, rng))
    values = [value for value, _ in measure.points]
    projectors = [projector for _, projector in measure.points]

    rebuilt = SpectralMeasure.from_points(SpectralKind.HERMITIAN, values, projectors)

    np.testing.assert_allclose(reconstruct(rebuilt), reconstruct(measure), atol=1e-12)


def test_require_kind_rejects_wrong_kind(rng: np.random.Generator) -> None:
    measure = hermitian_measure(random_hermitian(3, rng))

    with pytest.raises(SpectralKindMismatch):
        require_kind(measure, SpectralKind.UNITARY)
