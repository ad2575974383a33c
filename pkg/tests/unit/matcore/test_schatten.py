import math

import numpy as np
import pytest

from src.core.errors import InvalidExponent
from src.matcore.dense import matrix_unit
from src.matcore.random_matrices import random_matrix, random_unitary
from src.matcore.schatten import (
    conjugate_exponent,
    format_exponent,
    harmonic_exponent,
    operator_norm,
    parse_exponent,
    schatten_norm,
)

pytestmark = pytest.mark.unit


def test_parse_exponent_accepts_inf_literal_and_numbers() -> None:
    assert parse_exponent("inf") == math.inf
    assert parse_exponent(" INF ") == math.inf
    assert parse_exponent("2") == 2.0
    assert parse_exponent(0.5) == 0.5


@pytest.mark.parametrize("raw", ["0", "-1", "abc", "nan", 0.0])
def test_parse_exponent_rejects_nonpositive_and_garbage(raw: object) -> None:
    with pytest.raises(InvalidExponent):
        parse_exponent(raw)  # type: ignore[arg-type]


def test_format_exponent() -> None:
    assert format_exponent(math.inf) == "inf"
    assert format_exponent(2.0) == "2"
    assert format_exponent(0.5) == "0.5"


def test_conjugate_and_harmonic_exponents() -> None:
    assert conjugate_exponent(1.0) == math.inf
    assert conjugate_exponent(2.0) == 2.0
    assert conjugate_exponent(math.inf) == 1.0
    assert conjugate_exponent(4.0) == pytest.approx(4.0 / 3.0)
    assert harmonic_exponent(2.0, 2.0) == pytest.approx(1.0)
    assert harmonic_exponent(math.inf, math.inf) == math.inf
    with pytest.raises(InvalidExponent):
        conjugate_exponent(0.5)


def test_schatten_norms_of_diagonal_matrix() -> None:
    matrix = np.diag([3.0, 4.0]).astype(np.complex128)

    assert schatten_norm(matrix, 1.0) == pytest.approx(7.0)
    assert schatten_norm(matrix, 2.0) == pytest.approx(5.0)
    assert schatten_norm(matrix, math.inf) == pytest.approx(4.0)
    # quasi-norm below one
    assert schatten_norm(matrix, 0.5) == pytest.approx(7.0 + 4.0 * math.sqrt(3.0))


def test_schatten_norm_of_zero_matrix_is_zero() -> None:
    assert schatten_norm(np.zeros((3, 3), dtype=np.complex128), 1.0) == 0.0


def test_operator_norm_of_matrix_unit() -> None:
    assert operator_norm(matrix_unit(3, 4, 1, 2)) == pytest.approx(1.0)


@pytest.mark.parametrize("p", [0.5, 1.0, 2.0, 3.0, math.inf])
def test_schatten_norm_is_unitarily_invariant(rng: np.random.Generator, p: float) -> None:
    matrix = random_matrix(5, 5, rng)
    u = random_unitary(5, rng)
    v = random_unitary(5, rng)

    assert schatten_norm(u @ matrix @ v, p) == pytest.approx(schatten_norm(matrix, p), rel=1e-12)


def test_schatten_norms_decrease_in_p(rng: np.random.Generator) -> None:
    matrix = random_matrix(6, 6, rng)
    norms = [schatten_norm(matrix, p) for p in (0.5, 1.0, 2.0, 4.0, math.inf)]

    assert all(a >= b for a, b in zip(norms, norms[1:]))
