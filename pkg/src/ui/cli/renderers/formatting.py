import math

from src.core.models.schatten_report import Verdict

VERDICT_MARKUP = {
    Verdict.PASS: "[bold green]pass[/bold green]",
    Verdict.FAIL: "[bold red]fail[/bold red]",
    Verdict.NA: "[dim]n/a[/dim]",
}


def format_number(value: float | None, digits: int = 6) -> str:
    if value is None:
        return "-"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.{digits}g}"


def verdict_markup(verdict: Verdict) -> str:
    return VERDICT_MARKUP[verdict]
