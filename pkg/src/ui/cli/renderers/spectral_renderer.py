from rich.table import Table

from src.core.models.spectral_payload import SpectralMeasurePayload
from src.ui.cli.renderers.formatting import format_number


def render_spectral_measure(measure: SpectralMeasurePayload, reconstruction_error: float) -> Table:
    table = Table(
        title=f"{measure.kind.value} spectral measure, dim {measure.dim}",
        caption=f"relative reconstruction error {format_number(reconstruction_error, 3)}",
    )
    table.add_column("#", justify="right")
    table.add_column("value", justify="right")
    table.add_column("multiplicity", justify="right")
    for index, point in enumerate(measure.points):
        value = complex(point.re, point.im)
        text = format_number(point.re, 12) if point.im == 0.0 else f"{value:.12g}"
        table.add_row(str(index), text, str(point.multiplicity))
    return table
