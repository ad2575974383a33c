import math

import numpy as np
import pytest

from src.core.errors import DimensionMismatch
from src.divdiff.hilbert import hilbert_commutator_split, hilbert_matrix, hilbert_matvec, hilbert_norm
from src.divdiff.sinc import divdiff_matrix
from src.funcalc.functions import TrigPoly

pytestmark = pytest.mark.unit


def test_hilbert_matrix_entries() -> None:
    matrix = hilbert_matrix(3)

    np.testing.assert_allclose(matrix, [[0.0, -1.0, -0.5], [1.0, 0.0, -1.0], [0.5, 1.0, 0.0]])
    np.testing.assert_allclose(matrix, -matrix.T)


def test_matvec_matches_dense_product(rng: np.random.Generator) -> None:
    vector = rng.standard_normal(17) + 1j * rng.standard_normal(17)

    np.testing.assert_allclose(hilbert_matvec(vector), hilbert_matrix(17) @ vector, atol=1e-12)
    np.testing.assert_array_equal(hilbert_matvec(np.ones(1)), [0.0])


def test_small_norms_are_exact() -> None:
    assert hilbert_norm(1) == 0.0
    assert hilbert_norm(3) == pytest.approx(1.5, abs=1e-8)


def test_norm_matches_dense_and_stays_below_pi() -> None:
    norm = hilbert_norm(64)

    assert norm == pytest.approx(np.linalg.norm(hilbert_matrix(64), 2), rel=1e-8)
    assert norm < math.pi


def test_commutator_split_reassembles_divided_differences() -> None:
    f = TrigPoly.from_terms({(1, 0): 1.0, (-1, 1): 0.5j})
    divided = divdiff_matrix(f, 0.3, 4)

    commutator, diagonal = hilbert_commutator_split(divided.samples, divided.derivatives, 4)

    np.testing.assert_allclose(commutator + diagonal, divided.entries, atol=1e-12)


def test_commutator_split_checks_sample_count() -> None:
    with pytest.raises(DimensionMismatch):
        hilbert_commutator_split(np.ones(4), np.ones(4), 2)


@pytest.mark.slow
def test_norm_at_size_4096_approaches_pi() -> None:
    norm = hilbert_norm(4096)

    assert math.pi - 0.05 <= norm <= math.pi + 1e-9
