from rich.panel import Panel

from src.core.models.identity_report import IdentitySummary
from src.core.models.schatten_report import Verdict
from src.ui.cli.renderers.formatting import format_number, verdict_markup


def render_identity_summary(summary: IdentitySummary) -> Panel:
    content = "\n".join(
        [
            f"Identity: {summary.identity.value}",
            f"Trials: {summary.trials}",
            f"Max residual: {format_number(summary.max_residual, 3)}",
            f"  first side: {format_number(summary.max_first_residual, 3)}",
            f"  second side: {format_number(summary.max_second_residual, 3)}",
            f"Tolerance: {format_number(summary.tolerance, 3)}",
            f"Verdict: {verdict_markup(summary.verdict)}",
        ]
    )
    border_style = "green" if summary.verdict == Verdict.PASS else "red"
    return Panel(content, title="Perturbation identity", border_style=border_style)
