from collections.abc import Mapping, Sequence

from rich.table import Table

from src.core.models.scan_record import ScanRecord
from src.matcore.schatten import format_exponent
from src.ui.cli.renderers.formatting import format_number, verdict_markup


def render_scan_records(records: Sequence[ScanRecord], *, title: str = "Lipschitz ratios") -> Table:
    table = Table(title=title)
    table.add_column("family")
    table.add_column("N", justify="right")
    table.add_column("p", justify="right")
    table.add_column("ε", justify="right")
    table.add_column("measured", justify="right")
    table.add_column("predicted", justify="right")
    table.add_column("bound", justify="right")
    table.add_column("measured/bound", justify="right")
    table.add_column("verdict", justify="center")

    for record in records:
        table.add_row(
            record.family,
            str(record.N),
            format_exponent(record.p),
            format_number(record.epsilon),
            format_number(record.measured, 10),
            format_number(record.predicted, 10),
            format_number(record.bound),
            format_number(record.ratio),
            verdict_markup(record.verdict),
        )
    return table


def render_slopes(slopes: Mapping[tuple[str, float], float]) -> Table:
    table = Table(title="log-log growth in N")
    table.add_column("family")
    table.add_column("p", justify="right")
    table.add_column("slope", justify="right")
    for (family, p), slope in slopes.items():
        table.add_row(family, format_exponent(p), format_number(slope, 4))
    return table
