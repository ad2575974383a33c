from __future__ import annotations

import math
from typing import TypeAlias

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from src.core.errors import InvalidExponent, NoConvergence

SchattenExponent: TypeAlias = float

INF_LITERAL = "inf"


def parse_exponent(value: str | float | int) -> SchattenExponent:
    """Parse a Schatten exponent; the literal "inf" (any case) means the operator norm."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text in {INF_LITERAL, "infinity", "∞"}:
            return math.inf
        try:
            parsed = float(text)
        except ValueError as exc:
            raise InvalidExponent(f"not a Schatten exponent: {value!r}") from exc
    else:
        parsed = float(value)

    if math.isnan(parsed) or parsed <= 0.0:
        raise InvalidExponent(f"Schatten exponent must be positive, got {value!r}")
    return parsed


def format_exponent(p: SchattenExponent) -> str:
    if math.isinf(p):
        return INF_LITERAL
    return f"{p:g}"


def conjugate_exponent(p: SchattenExponent) -> SchattenExponent:
    """Hölder conjugate p' with 1/p + 1/p' = 1; p = 1 maps to inf."""
    if p < 1.0:
        raise InvalidExponent(f"conjugate exponent needs p >= 1, got {p}")
    if p == 1.0:
        return math.inf
    if math.isinf(p):
        return 1.0
    return p / (p - 1.0)


def harmonic_exponent(p: SchattenExponent, q: SchattenExponent) -> SchattenExponent:
    """The r with 1/r = 1/p + 1/q."""
    inverse = 1.0 / p + 1.0 / q
    if inverse == 0.0:
        return math.inf
    return 1.0 / inverse


def singular_values(matrix: NDArray[np.complex128]) -> NDArray[np.float64]:
    try:
        values = scipy.linalg.svd(matrix, compute_uv=False, lapack_driver="gesvd")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise NoConvergence(f"SVD failed: {exc}") from exc
    return np.asarray(values, dtype=np.float64)


def schatten_norm(matrix: NDArray[np.complex128], p: SchattenExponent) -> float:
    """Schatten p-(quasi-)norm from the full SVD; p = inf is the operator norm."""
    p = parse_exponent(p)
    sigma = singular_values(matrix)
    if sigma.size == 0:
        return 0.0

    largest = float(sigma.max())
    if math.isinf(p) or largest == 0.0:
        return largest

    # scaled by the largest singular value so sigma**p cannot overflow or underflow
    scaled = sigma / largest
    return largest * float(np.sum(scaled**p)) ** (1.0 / p)


def operator_norm(matrix: NDArray[np.complex128]) -> float:
    return schatten_norm(matrix, math.inf)
