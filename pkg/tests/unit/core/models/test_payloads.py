import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.core.errors import NonFiniteEntries
from src.core.models.matrix_payload import MatrixPayload
from src.core.models.spectral_payload import SpectralMeasurePayload
from src.core.models.trig_poly_payload import TrigPolyPayload
from src.funcalc.functions import TrigPoly, TrigPoly1D
from src.matcore.spectral import SpectralKind, hermitian_measure

pytestmark = pytest.mark.unit


def test_matrix_payload_is_row_major() -> None:
    payload = MatrixPayload.model_validate({"rows": 2, "cols": 3, "re": [1, 2, 3, 4, 5, 6], "im": [0, 0, 0, 0, 0, 1]})

    matrix = payload.to_array()

    assert matrix.shape == (2, 3)
    assert matrix[0, 2] == 3.0
    assert matrix[1, 2] == 6.0 + 1.0j


def test_matrix_payload_from_array() -> None:
    matrix = np.array([[1.0, 2.0j], [-1.0, 0.5]])

    payload = MatrixPayload.from_array(matrix)

    assert payload.re == [1.0, 0.0, -1.0, 0.5]
    assert payload.im == [0.0, 2.0, 0.0, 0.0]
    np.testing.assert_array_equal(payload.to_array(), matrix)


@pytest.mark.parametrize(
    "data",
    [
        {"rows": 2, "cols": 2, "re": [1, 2, 3], "im": [0, 0, 0, 0]},
        {"rows": 1, "cols": 1, "re": [math.inf], "im": [0]},
        {"rows": 0, "cols": 1, "re": [], "im": []},
    ],
)
def test_matrix_payload_validation(data: dict[str, object]) -> None:
    with pytest.raises(ValidationError):
        MatrixPayload.model_validate(data)


def test_matrix_payload_refuses_nonfinite_arrays() -> None:
    with pytest.raises(NonFiniteEntries):
        MatrixPayload.from_array(np.array([[np.nan]]))
    with pytest.raises(ValueError):
        MatrixPayload.from_array(np.zeros(3))


def test_bivariate_trig_poly_payload() -> None:
    payload = TrigPolyPayload.model_validate_json(
        '{"periods": [6.283185307179586, 6.283185307179586],'
        ' "terms": [{"j": 1, "k": 0, "re": 1.0}, {"j": 0, "k": -2, "re": 0.0, "im": 2.0}]}'
    )

    f = payload.to_function()

    assert isinstance(f, TrigPoly)
    assert f.is_torus
    value = f.evaluate(np.array([0.3]), np.array([0.4]))[0]
    assert value == pytest.approx(np.exp(0.3j) + 2.0j * np.exp(-0.8j))


def test_univariate_trig_poly_payload() -> None:
    f = TrigPolyPayload.model_validate({"periods": [2.0], "terms": [{"j": 1, "re": 1.0}]}).to_function()

    assert isinstance(f, TrigPoly1D)
    assert f.evaluate(np.array([0.5]))[0] == pytest.approx(np.exp(1j * np.pi * 0.5))


@pytest.mark.parametrize(
    "data",
    [
        {"periods": [1.0, 1.0], "terms": [{"j": 1, "re": 1.0}]},
        {"periods": [1.0], "terms": [{"j": 1, "k": 2, "re": 1.0}]},
        {"periods": [0.0], "terms": []},
        {"periods": [1.0, 1.0, 1.0], "terms": []},
    ],
)
def test_trig_poly_payload_validation(data: dict[str, object]) -> None:
    with pytest.raises(ValidationError):
        TrigPolyPayload.model_validate(data)


def test_trig_poly_payload_from_function() -> None:
    f = TrigPoly.from_terms({(1, 2): 3.0 - 1.0j})

    payload = TrigPolyPayload.from_function(f)

    assert payload.periods == [2.0 * math.pi, 2.0 * math.pi]
    assert [(t.j, t.k, t.re, t.im) for t in payload.terms] == [(1, 2, 3.0, -1.0)]


def test_spectral_payload_rebuilds_the_measure() -> None:
    matrix = np.diag([1.0, -2.0, 1.0]).astype(np.complex128)
    measure = hermitian_measure(matrix)

    payload = SpectralMeasurePayload.from_measure(measure)
    rebuilt = payload.to_measure()

    assert payload.kind == SpectralKind.HERMITIAN
    assert payload.dim == 3
    assert sorted((point.re, point.multiplicity) for point in payload.points) == [(-2.0, 1), (1.0, 2)]
    np.testing.assert_allclose(rebuilt.function_of(rebuilt.values), matrix, atol=1e-12)
