import math

import numpy as np
import pytest
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from src.core.models.identity_report import IdentityKind, IdentitySummary
from src.core.models.scan_record import ScanRecord
from src.core.models.schatten_report import BoundKind, SchattenReport, Verdict
from src.core.models.spectral_payload import SpectralMeasurePayload
from src.matcore.spectral import hermitian_measure
from src.runtime.jobs.besov_job import BesovOutcome
from src.ui.cli.renderers.audit_renderer import render_audit_summary
from src.ui.cli.renderers.besov_renderer import render_besov
from src.ui.cli.renderers.formatting import format_number, verdict_markup
from src.ui.cli.renderers.identity_renderer import render_identity_summary
from src.ui.cli.renderers.scan_renderer import render_scan_records, render_slopes
from src.ui.cli.renderers.spectral_renderer import render_spectral_measure

pytestmark = pytest.mark.unit


def _text(renderable: Table | Panel) -> str:
    console = Console(width=160, record=True, color_system=None)
    console.print(renderable)
    return console.export_text()


def _report(p: float, verdict: Verdict, measured: float, context: str) -> SchattenReport:
    return SchattenReport(
        context=context, kind=BoundKind.HAAGERUP_RIGHT, p=p, r=p, measured=measured, bound=1.0, verdict=verdict
    )


def test_format_number() -> None:
    assert format_number(None) == "-"
    assert format_number(math.inf) == "inf"
    assert format_number(-math.inf) == "-inf"
    assert format_number(1.0 / 3.0, 3) == "0.333"
    assert "green" in verdict_markup(Verdict.PASS)


def test_audit_summary_groups_trials() -> None:
    reports = [
        _report(2.0, Verdict.PASS, 0.25, "trial=0 dim=2"),
        _report(2.0, Verdict.FAIL, 1.5, "trial=1 dim=2"),
        _report(math.inf, Verdict.PASS, 0.5, "trial=0 dim=2"),
    ]

    table = render_audit_summary(reports)

    assert table.row_count == 2
    text = _text(table)
    assert "1.5" in text
    assert "fail" in text
    assert "inf" in text


def test_scan_records_and_slopes() -> None:
    records = [ScanRecord(family="counterexample", N=4, p=math.inf, measured=2.0, predicted=2.0, verdict=Verdict.PASS)]

    text = _text(render_scan_records(records))
    slopes = _text(render_slopes({("counterexample", math.inf): 0.5}))

    assert "counterexample" in text
    assert "pass" in text
    assert "0.5" in slopes


def test_identity_summary_panel() -> None:
    summary = IdentitySummary(
        identity=IdentityKind.UNITARY,
        trials=4,
        max_residual=2e-14,
        max_first_residual=1e-14,
        max_second_residual=2e-14,
        tolerance=1e-8,
        verdict=Verdict.PASS,
    )

    text = _text(render_identity_summary(summary))

    assert "unitary" in text
    assert "Trials: 4" in text
    assert "2e-14" in text


def test_spectral_measure_table() -> None:
    payload = SpectralMeasurePayload.from_measure(hermitian_measure(np.diag([1.0, 1.0, -3.0])))

    table = render_spectral_measure(payload, 1e-16)

    assert table.row_count == 2
    assert "hermitian" in _text(table)


def test_besov_table() -> None:
    outcome = BesovOutcome(domain="torus", norm=4.0, upper=4.5, levels={1: (1.0, 1.1), 2: (0.5, 0.6)})

    table = render_besov(outcome)

    assert table.row_count == 3
    assert "torus" in _text(table)
