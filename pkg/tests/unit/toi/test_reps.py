from collections.abc import Callable

import numpy as np
import pytest

from src.core.errors import DimensionMismatch, NonFiniteEntries
from src.toi.reps import (
    HaagerupLikeRep1,
    HaagerupLikeRep2,
    HaagerupRep,
    ProjectiveRep,
    embed_projective,
    haagerup_norm_of_rep,
    scaled_rep,
    zero_rep,
)

pytestmark = pytest.mark.unit

TableFactory = Callable[..., np.ndarray]

SUPPORTS = ([0.0, 1.0, 2.0], [-1.0, 0.5], [0.25])


def test_haagerup_rep_factor_norms() -> None:
    alpha = np.array([[3.0, 4.0], [0.0, 1.0], [1.0, 0.0]])
    beta = np.array([np.eye(2), 2.0 * np.eye(2)])
    gamma = np.array([[1.0, 0.0]])

    rep = HaagerupRep.build(alpha, beta, gamma, SUPPORTS)

    assert rep.shape == (3, 2, 1)
    assert rep.factor_norms() == pytest.approx((5.0, 2.0, 1.0))
    assert haagerup_norm_of_rep(rep) == pytest.approx(10.0)


def test_build_rejects_mismatched_inner_indices() -> None:
    with pytest.raises(DimensionMismatch):
        HaagerupRep.build(np.ones((3, 2)), np.ones((2, 3, 1)), np.ones((1, 1)), SUPPORTS)
    with pytest.raises(DimensionMismatch):
        HaagerupLikeRep1.build(np.ones((3, 2)), np.ones((2, 2)), np.ones((1, 2, 3)), SUPPORTS)
    with pytest.raises(DimensionMismatch):
        HaagerupLikeRep2.build(np.ones((3, 1, 1)), np.ones((2, 2)), np.ones((1, 1)), SUPPORTS)


def test_build_rejects_rows_that_do_not_match_support() -> None:
    with pytest.raises(DimensionMismatch, match="alpha has 2 rows"):
        HaagerupLikeRep1.build(np.ones((2, 1)), np.ones((2, 1)), np.ones((1, 1, 1)), SUPPORTS)


def test_build_rejects_non_finite_factors() -> None:
    with pytest.raises(NonFiniteEntries):
        ProjectiveRep.build(np.full((3, 1), np.nan), np.ones((2, 1)), np.ones((1, 1)), SUPPORTS)


def test_haagerup_like_pointwise_contracts_the_matrix_factor(complex_table: TableFactory) -> None:
    alpha, beta, gamma = complex_table(3, 2), complex_table(2, 4), complex_table(1, 2, 4)

    rep = HaagerupLikeRep1.build(alpha, beta, gamma, SUPPORTS)

    expected = alpha[0] @ gamma[0] @ beta[1]
    assert rep.pointwise()[0, 1, 0] == pytest.approx(expected)


def test_embedding_preserves_values_and_norm(complex_table: TableFactory) -> None:
    rep = ProjectiveRep.build(
        complex_table(3, 4), complex_table(2, 4), complex_table(1, 4), SUPPORTS
    )

    embedded = embed_projective(rep)

    np.testing.assert_allclose(embedded.pointwise(), rep.pointwise(), atol=1e-12)
    assert haagerup_norm_of_rep(embedded) <= rep.projective_norm() * (1 + 1e-12)


def test_embedding_drops_terms_that_vanish_on_the_support() -> None:
    phi = np.array([[1.0, 0.0], [2.0, 0.0], [1.0, 0.0]])
    rep = ProjectiveRep.build(phi, np.ones((2, 2)), np.ones((1, 2)), SUPPORTS)

    embedded = embed_projective(rep)

    assert embedded.alpha.shape == (3, 1)
    assert rep.projective_norm() == pytest.approx(2.0)


def test_scaled_rep_scales_values_and_declared_bound(complex_table: TableFactory) -> None:
    rep = HaagerupLikeRep2.build(
        complex_table(3, 2, 2), complex_table(2, 2), complex_table(1, 2), SUPPORTS, 4.0
    )

    scaled = scaled_rep(rep, -0.5j)

    assert isinstance(scaled, HaagerupLikeRep2)
    np.testing.assert_allclose(scaled.pointwise(), -0.5j * rep.pointwise())
    assert scaled.declared_bound == pytest.approx(2.0)


@pytest.mark.parametrize("kind", [HaagerupRep, HaagerupLikeRep1, HaagerupLikeRep2, ProjectiveRep])
def test_zero_rep_vanishes(kind: type) -> None:
    rep = zero_rep(kind, SUPPORTS)

    assert isinstance(rep, kind)
    np.testing.assert_array_equal(rep.pointwise(), np.zeros((3, 2, 1)))
    assert haagerup_norm_of_rep(rep) == 0.0
