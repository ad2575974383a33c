from src.matcore.dense import DenseMatrix, adjoint, as_dense, frobenius
from src.matcore.schatten import (
    SchattenExponent,
    conjugate_exponent,
    operator_norm,
    parse_exponent,
    schatten_norm,
)
from src.matcore.spectral import (
    SpectralKind,
    SpectralMeasure,
    reconstruct,
    spectral_decompose,
)

__all__ = [
    "DenseMatrix",
    "SchattenExponent",
    "SpectralKind",
    "SpectralMeasure",
    "adjoint",
    "as_dense",
    "conjugate_exponent",
    "frobenius",
    "operator_norm",
    "parse_exponent",
    "reconstruct",
    "schatten_norm",
    "spectral_decompose",
]
