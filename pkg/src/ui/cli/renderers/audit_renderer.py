from collections.abc import Sequence
from dataclasses import dataclass

from rich.table import Table

from src.core.models.schatten_report import SchattenReport, Verdict
from src.matcore.schatten import format_exponent
from src.ui.cli.renderers.formatting import format_number, verdict_markup


@dataclass
class _Group:
    trials: int = 0
    failures: int = 0
    worst_ratio: float = 0.0


def render_audit_summary(reports: Sequence[SchattenReport]) -> Table:
    """One row per (kind, p, q) with the worst measured/bound ratio over all trials."""
    groups: dict[tuple[str, float, float | None, float], _Group] = {}
    for report in reports:
        group = groups.setdefault((report.kind.value, report.p, report.q, report.r), _Group())
        group.trials += 1
        group.failures += report.verdict == Verdict.FAIL
        group.worst_ratio = max(group.worst_ratio, report.ratio)

    table = Table(title="Schatten bound audits")
    table.add_column("kind")
    table.add_column("p", justify="right")
    table.add_column("q", justify="right")
    table.add_column("r", justify="right")
    table.add_column("trials", justify="right")
    table.add_column("worst ratio", justify="right")
    table.add_column("verdict", justify="center")
    for (kind, p, q, r), group in groups.items():
        table.add_row(
            kind,
            format_exponent(p),
            "-" if q is None else format_exponent(q),
            format_exponent(r),
            str(group.trials),
            format_number(group.worst_ratio),
            verdict_markup(Verdict.FAIL if group.failures else Verdict.PASS),
        )
    return table
