from __future__ import annotations

import math

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, Field, model_validator

from src.core.errors import NonFiniteEntries
from src.matcore.dense import DenseMatrix


class MatrixPayload(BaseModel):
    """Row-major complex matrix: {"rows", "cols", "re", "im"}."""

    rows: int = Field(gt=0)
    cols: int = Field(gt=0)
    re: list[float]
    im: list[float]

    @model_validator(mode="after")
    def check_entries(self) -> MatrixPayload:
        expected = self.rows * self.cols
        if len(self.re) != expected or len(self.im) != expected:
            raise ValueError(
                f"expected {expected} entries for a {self.rows}x{self.cols} matrix, "
                f"got re={len(self.re)}, im={len(self.im)}"
            )
        if not all(math.isfinite(v) for v in self.re) or not all(math.isfinite(v) for v in self.im):
            raise ValueError("matrix entries must be finite")
        return self

    def to_array(self) -> DenseMatrix:
        real = np.asarray(self.re, dtype=np.float64)
        imag = np.asarray(self.im, dtype=np.float64)
        return (real + 1j * imag).reshape(self.rows, self.cols)

    @classmethod
    def from_array(cls, matrix: ArrayLike) -> MatrixPayload:
        array = np.asarray(matrix, dtype=np.complex128)
        if array.ndim != 2:
            raise ValueError(f"expected a 2-D matrix, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise NonFiniteEntries("matrix has non-finite entries")
        flat = array.reshape(-1)
        return cls(
            rows=array.shape[0],
            cols=array.shape[1],
            re=[float(v) for v in flat.real],
            im=[float(v) for v in flat.imag],
        )
