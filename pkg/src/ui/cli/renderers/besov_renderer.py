from rich.table import Table

from src.runtime.jobs.besov_job import BesovOutcome
from src.ui.cli.renderers.formatting import format_number


def render_besov(outcome: BesovOutcome) -> Table:
    title = f"B¹∞,1 norm on the {outcome.domain}"
    if outcome.domain == "plane":
        title += f" (ε = 2^-{outcome.scale})"
    table = Table(title=title)
    table.add_column("level", justify="right")
    table.add_column("sup (grid)", justify="right")
    table.add_column("sup (upper)", justify="right")
    table.add_column("2ⁿ·sup", justify="right")

    for n, (lower, upper) in outcome.levels.items():
        table.add_row(str(n), format_number(lower, 10), format_number(upper, 10), format_number(2.0**n * lower, 10))
    table.add_section()
    table.add_row("norm", "", format_number(outcome.upper, 10), format_number(outcome.norm, 12))
    return table
