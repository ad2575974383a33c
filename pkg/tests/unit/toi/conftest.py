from collections.abc import Callable

import numpy as np
import pytest

from src.matcore.random_matrices import random_hermitian, random_matrix
from src.matcore.spectral import SpectralMeasure, hermitian_measure

Triple = tuple[SpectralMeasure, SpectralMeasure, SpectralMeasure]
TableFactory = Callable[..., np.ndarray]


@pytest.fixture
def complex_table(rng: np.random.Generator) -> TableFactory:
    def make(*shape: int) -> np.ndarray:
        return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)

    return make


@pytest.fixture
def measures(rng: np.random.Generator) -> Triple:
    return (
        hermitian_measure(random_hermitian(3, rng)),
        hermitian_measure(random_hermitian(4, rng)),
        hermitian_measure(random_hermitian(2, rng)),
    )


@pytest.fixture
def operands(rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    return random_matrix(3, 4, rng), random_matrix(4, 2, rng)
