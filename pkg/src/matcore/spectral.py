from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike, NDArray

from src.core.errors import DimensionMismatch, NoConvergence, NotNormal, SpectralKindMismatch
from src.matcore.dense import (
    DenseMatrix,
    adjoint,
    as_dense,
    frobenius,
    is_hermitian,
    is_unitary,
    require_square,
)
from src.utils.logging import get_logger

logger = get_logger(__name__)

DEFAULT_CLUSTER_REL = 1e-8
DEFAULT_NORMALITY_REL = 1e-10
TWO_PI = 2.0 * math.pi


class SpectralKind(str, Enum):
    HERMITIAN = "hermitian"
    UNITARY = "unitary"


@dataclass(frozen=True)
class SpectralMeasure:
    """
    Finite resolution of the identity.

    Point i carries the value ``values[i]`` and the projector onto the span of the
    ``frame`` columns whose label is i. The frame is unitary, so projectors of distinct
    points are orthogonal and sum to the identity by construction.
    """

    kind: SpectralKind
    values: NDArray[np.complex128]
    frame: DenseMatrix
    labels: NDArray[np.int64]

    @property
    def dim(self) -> int:
        return int(self.frame.shape[0])

    @property
    def size(self) -> int:
        return int(self.values.shape[0])

    @property
    def real_values(self) -> NDArray[np.float64]:
        return np.ascontiguousarray(self.values.real)

    @property
    def support(self) -> NDArray[np.float64] | NDArray[np.complex128]:
        """Spectral points as the integrands see them: reals or unit-modulus complex."""
        if self.kind == SpectralKind.HERMITIAN:
            return self.real_values
        return self.values

    @cached_property
    def projectors(self) -> NDArray[np.complex128]:
        stack = np.zeros((self.size, self.dim, self.dim), dtype=np.complex128)
        for index in range(self.size):
            columns = self.frame[:, self.labels == index]
            stack[index] = columns @ adjoint(columns)
        return stack

    @property
    def points(self) -> list[tuple[complex, DenseMatrix]]:
        return [(complex(value), projector) for value, projector in zip(self.values, self.projectors)]

    def function_of(self, column: ArrayLike) -> DenseMatrix:
        """∫ φ dE for φ given by its values at the spectral points."""
        weights = np.asarray(column, dtype=np.complex128)
        if weights.shape != (self.size,):
            raise DimensionMismatch(
                f"expected {self.size} values on the spectral support, got shape {weights.shape}"
            )
        return (self.frame * weights[self.labels]) @ adjoint(self.frame)

    def functions_of(self, table: ArrayLike) -> NDArray[np.complex128]:
        """∫ φ_j dE for every column j of a (points, J) value table; returns (J, dim, dim)."""
        values = np.asarray(table, dtype=np.complex128)
        if values.ndim != 2 or values.shape[0] != self.size:
            raise DimensionMismatch(
                f"expected a ({self.size}, J) value table, got shape {values.shape}"
            )
        expanded = values[self.labels].T
        return np.einsum("ab,jb,cb->jac", self.frame, expanded, np.conj(self.frame))

    @classmethod
    def from_frame(
        cls,
        kind: SpectralKind,
        values: ArrayLike,
        frame: ArrayLike,
        labels: ArrayLike | None = None,
    ) -> SpectralMeasure:
        value_array = np.asarray(values, dtype=np.complex128).reshape(-1)
        frame_matrix = as_dense(frame)
        dim = require_square(frame_matrix, "frame")
        label_array = (
            np.arange(dim, dtype=np.int64)
            if labels is None
            else np.asarray(labels, dtype=np.int64).reshape(-1)
        )
        if label_array.shape != (dim,):
            raise DimensionMismatch(f"expected {dim} labels, got {label_array.shape}")
        if value_array.size == 0 or set(label_array.tolist()) != set(range(value_array.size)):
            raise DimensionMismatch("every spectral point needs at least one frame column")
        return cls(kind=kind, values=value_array, frame=frame_matrix, labels=label_array)

    @classmethod
    def from_points(
        cls,
        kind: SpectralKind,
        values: ArrayLike,
        projectors: ArrayLike,
    ) -> SpectralMeasure:
        value_array = np.asarray(values, dtype=np.complex128).reshape(-1)
        stack = np.asarray(projectors, dtype=np.complex128)
        if stack.ndim != 3 or stack.shape[0] != value_array.size:
            raise DimensionMismatch("need one square projector per spectral value")

        columns: list[DenseMatrix] = []
        labels: list[int] = []
        for index, projector in enumerate(stack):
            eigenvalues, eigenvectors = scipy.linalg.eigh((projector + adjoint(projector)) / 2.0)
            selected = eigenvectors[:, eigenvalues > 0.5]
            columns.append(selected)
            labels.extend([index] * selected.shape[1])

        frame = np.concatenate(columns, axis=1)
        return cls.from_frame(kind, value_array, frame, labels)


def check_invariants(measure: SpectralMeasure, tol: float) -> list[str]:
    """Return the violated invariants (empty when the measure is valid)."""
    reasons: list[str] = []
    projectors = measure.projectors
    identity = np.eye(measure.dim, dtype=np.complex128)

    for index, projector in enumerate(projectors):
        if frobenius(projector @ projector - projector) > tol:
            reasons.append(f"projector_{index}_not_idempotent")
        if frobenius(projector - adjoint(projector)) > tol:
            reasons.append(f"projector_{index}_not_hermitian")

    for i in range(measure.size):
        for j in range(i + 1, measure.size):
            if frobenius(projectors[i] @ projectors[j]) > tol:
                reasons.append(f"projectors_{i}_{j}_not_orthogonal")

    if frobenius(projectors.sum(axis=0) - identity) > tol:
        reasons.append("not_a_resolution_of_identity")

    order = _ordering_keys(measure.kind, measure.values)
    if np.any(np.diff(order) <= 0.0):
        reasons.append("values_not_strictly_ordered")

    return reasons


def reconstruct(measure: SpectralMeasure) -> DenseMatrix:
    return measure.function_of(measure.values)


def spectral_decompose(
    matrix: ArrayLike,
    kind: SpectralKind | str = SpectralKind.HERMITIAN,
    tol: float | None = None,
    cluster_rel: float = DEFAULT_CLUSTER_REL,
) -> SpectralMeasure:
    kind = SpectralKind(kind)
    h = as_dense(matrix)
    dim = require_square(h)
    scale = frobenius(h)
    tolerance = tol if tol is not None else DEFAULT_NORMALITY_REL * max(scale, 1.0)

    if kind == SpectralKind.HERMITIAN:
        if not is_hermitian(h, tolerance):
            raise NotNormal(f"matrix is not Hermitian within {tolerance:.3e}")
        try:
            eigenvalues, eigenvectors = scipy.linalg.eigh((h + adjoint(h)) / 2.0)
        except np.linalg.LinAlgError as exc:
            raise NoConvergence(f"Hermitian eigensolver failed: {exc}") from exc
        raw_values = eigenvalues.astype(np.complex128)
    else:
        if not is_unitary(h, tolerance):
            raise NotNormal(f"matrix is not unitary within {tolerance:.3e}")
        try:
            triangular, eigenvectors = scipy.linalg.schur(h, output="complex")
        except (np.linalg.LinAlgError, ValueError) as exc:
            raise NoConvergence(f"Schur decomposition failed: {exc}") from exc
        diagonal = np.diag(triangular)
        raw_values = diagonal / np.abs(diagonal)

    order = np.argsort(_ordering_keys(kind, raw_values), kind="stable")
    raw_values = raw_values[order]
    eigenvectors = eigenvectors[:, order]

    groups = _cluster(kind, raw_values, cluster_rel)
    values = np.empty(len(groups), dtype=np.complex128)
    labels = np.empty(dim, dtype=np.int64)
    for index, members in enumerate(groups):
        values[index] = _cluster_value(kind, raw_values[members])
        labels[members] = index

    if len(groups) < dim:
        logger.debug(f"Merged {dim} eigenvalues into {len(groups)} spectral points")

    values, labels = _reorder_points(kind, values, labels)
    return SpectralMeasure(kind=kind, values=values, frame=eigenvectors, labels=labels)


def hermitian_measure(matrix: ArrayLike, **kwargs: float) -> SpectralMeasure:
    return spectral_decompose(matrix, SpectralKind.HERMITIAN, **kwargs)  # type: ignore[arg-type]


def unitary_measure(matrix: ArrayLike, **kwargs: float) -> SpectralMeasure:
    return spectral_decompose(matrix, SpectralKind.UNITARY, **kwargs)  # type: ignore[arg-type]


def scalar_measure(kind: SpectralKind, value: complex, dim: int) -> SpectralMeasure:
    """Spectral measure of value·I."""
    return SpectralMeasure.from_frame(
        kind, [value], np.eye(dim, dtype=np.complex128), np.zeros(dim, dtype=np.int64)
    )


def require_kind(measure: SpectralMeasure, kind: SpectralKind) -> None:
    if measure.kind != kind:
        raise SpectralKindMismatch(f"expected a {kind.value} spectral measure, got {measure.kind.value}")


def _ordering_keys(kind: SpectralKind, values: NDArray[np.complex128]) -> NDArray[np.float64]:
    if kind == SpectralKind.HERMITIAN:
        return np.asarray(values.real, dtype=np.float64)
    return np.mod(np.angle(values), TWO_PI)


def _cluster(
    kind: SpectralKind, values: NDArray[np.complex128], cluster_rel: float
) -> list[NDArray[np.int64]]:
    diameter = float(np.max(np.abs(values[:, None] - values[None, :]))) if values.size else 0.0
    threshold = cluster_rel * (diameter + 1.0)

    groups: list[list[int]] = [[0]]
    for index in range(1, values.size):
        if abs(values[index] - values[index - 1]) < threshold:
            groups[-1].append(index)
        else:
            groups.append([index])

    # on the circle the last cluster may wrap around to the first one
    if (
        kind == SpectralKind.UNITARY
        and len(groups) > 1
        and abs(values[groups[-1][-1]] - values[groups[0][0]]) < threshold
    ):
        groups[0] = groups.pop() + groups[0]

    return [np.asarray(group, dtype=np.int64) for group in groups]


def _cluster_value(kind: SpectralKind, members: NDArray[np.complex128]) -> complex:
    mean = complex(np.mean(members))
    if kind == SpectralKind.HERMITIAN:
        return complex(mean.real, 0.0)
    return mean / abs(mean)


def _reorder_points(
    kind: SpectralKind, values: NDArray[np.complex128], labels: NDArray[np.int64]
) -> tuple[NDArray[np.complex128], NDArray[np.int64]]:
    order = np.argsort(_ordering_keys(kind, values), kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    return values[order], rank[labels]
