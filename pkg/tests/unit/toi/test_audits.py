import math
from collections.abc import Callable

import numpy as np
import pytest

from src.core.errors import RegimeMismatch, UnsupportedRepresentation
from src.core.models.schatten_report import BoundKind, Verdict
from src.matcore.spectral import SpectralMeasure
from src.toi.audits import AuditTolerance, audit_schatten_bounds
from src.toi.reps import HaagerupLikeRep1, HaagerupLikeRep2, HaagerupRep, ProjectiveRep

pytestmark = pytest.mark.unit

Triple = tuple[SpectralMeasure, SpectralMeasure, SpectralMeasure]
Operands = tuple[np.ndarray, np.ndarray]
TableFactory = Callable[..., np.ndarray]


@pytest.fixture
def haagerup_rep(measures: Triple, complex_table: TableFactory) -> HaagerupRep:
    supports = tuple(measure.support for measure in measures)
    return HaagerupRep.build(complex_table(3, 2), complex_table(4, 2, 3), complex_table(2, 3), supports)


def test_tolerance_admits_rounding_above_the_bound() -> None:
    tolerance = AuditTolerance(margin=1e-9, atol=1e-13)

    assert tolerance.admits(1.0 + 1e-10, 1.0)
    assert tolerance.admits(1e-14, 0.0)
    assert not tolerance.admits(1.0 + 1e-6, 1.0)


@pytest.mark.parametrize(
    ("kind", "p", "q", "r"),
    [
        (BoundKind.HAAGERUP_RIGHT_HS, "2", None, 2.0),
        (BoundKind.HAAGERUP_LEFT_HS, "2", None, 2.0),
        (BoundKind.HAAGERUP_RIGHT, "4", None, 4.0),
        (BoundKind.HAAGERUP_LEFT, "inf", None, math.inf),
        (BoundKind.HAAGERUP_BOTH, "4", "4", 2.0),
    ],
)
def test_haagerup_bounds_hold(
    measures: Triple,
    operands: Operands,
    haagerup_rep: HaagerupRep,
    kind: BoundKind,
    p: str,
    q: str | None,
    r: float,
) -> None:
    report = audit_schatten_bounds(kind, haagerup_rep, *measures, *operands, p, q)

    assert report.verdict == Verdict.PASS
    assert report.r == r
    assert report.measured <= report.bound * (1 + 1e-9)


def test_projective_rep_is_embedded_for_haagerup_kinds(
    measures: Triple, operands: Operands, complex_table: TableFactory
) -> None:
    supports = tuple(measure.support for measure in measures)
    rep = ProjectiveRep.build(complex_table(3, 4), complex_table(4, 4), complex_table(2, 4), supports)

    report = audit_schatten_bounds("haagerup-right-hs", rep, *measures, *operands, "2")

    assert report.verdict == Verdict.PASS
    assert report.bound <= rep.projective_norm() * np.linalg.norm(operands[0], 2) * np.linalg.norm(
        operands[1], "fro"
    ) * (1 + 1e-9)


@pytest.mark.parametrize(("p", "q"), [("1", None), ("1.5", None), ("2", None), ("1", "inf"), ("1.5", "3")])
def test_first_kind_bound_holds(
    measures: Triple, operands: Operands, complex_table: TableFactory, p: str, q: str | None
) -> None:
    supports = tuple(measure.support for measure in measures)
    rep = HaagerupLikeRep1.build(complex_table(3, 2), complex_table(4, 3), complex_table(2, 2, 3), supports)

    report = audit_schatten_bounds(BoundKind.FIRST_KIND, rep, *measures, *operands, p, q)

    assert report.verdict == Verdict.PASS


@pytest.mark.parametrize(("p", "q"), [("1", None), ("2", None), ("2", "2"), ("inf", "1")])
def test_second_kind_bound_holds(
    measures: Triple, operands: Operands, complex_table: TableFactory, p: str, q: str | None
) -> None:
    supports = tuple(measure.support for measure in measures)
    rep = HaagerupLikeRep2.build(complex_table(3, 2, 3), complex_table(4, 2), complex_table(2, 3), supports)

    report = audit_schatten_bounds(BoundKind.SECOND_KIND, rep, *measures, *operands, p, q)

    assert report.verdict == Verdict.PASS


@pytest.mark.parametrize(
    ("kind", "p", "q"),
    [
        (BoundKind.HAAGERUP_RIGHT_HS, "1", None),
        (BoundKind.HAAGERUP_RIGHT, "1.5", None),
        (BoundKind.HAAGERUP_BOTH, "4", None),
        (BoundKind.HAAGERUP_BOTH, "2", "2"),
    ],
)
def test_haagerup_regimes_are_enforced(
    measures: Triple, operands: Operands, haagerup_rep: HaagerupRep, kind: BoundKind, p: str, q: str | None
) -> None:
    with pytest.raises(RegimeMismatch):
        audit_schatten_bounds(kind, haagerup_rep, *measures, *operands, p, q)


def test_first_kind_regime_is_enforced(
    measures: Triple, operands: Operands, complex_table: TableFactory
) -> None:
    supports = tuple(measure.support for measure in measures)
    rep = HaagerupLikeRep1.build(complex_table(3, 1), complex_table(4, 1), complex_table(2, 1, 1), supports)

    with pytest.raises(RegimeMismatch):
        audit_schatten_bounds(BoundKind.FIRST_KIND, rep, *measures, *operands, "3")
    with pytest.raises(RegimeMismatch):
        audit_schatten_bounds(BoundKind.FIRST_KIND, rep, *measures, *operands, "1.5", "1.5")


def test_kind_and_representation_must_match(
    measures: Triple, operands: Operands, haagerup_rep: HaagerupRep
) -> None:
    with pytest.raises(UnsupportedRepresentation):
        audit_schatten_bounds(BoundKind.FIRST_KIND, haagerup_rep, *measures, *operands, "1")
    with pytest.raises(UnsupportedRepresentation):
        audit_schatten_bounds(BoundKind.CLASS_C, haagerup_rep, *measures, *operands, "1")


def test_report_row_formats_exponents(measures: Triple, operands: Operands, haagerup_rep: HaagerupRep) -> None:
    report = audit_schatten_bounds(
        BoundKind.HAAGERUP_LEFT, haagerup_rep, *measures, *operands, "inf", context="trial 0"
    )

    row = report.to_row()

    assert row["context"] == "trial 0"
    assert row["kind"] == "haagerup-left"
    assert row["p"] == "inf"
    assert row["q"] == ""
    assert 0.0 <= report.ratio <= 1.0 + 1e-9
