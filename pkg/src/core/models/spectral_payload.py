from __future__ import annotations

from pydantic import BaseModel

from src.core.models.matrix_payload import MatrixPayload
from src.matcore.spectral import SpectralKind, SpectralMeasure


class SpectralPoint(BaseModel):
    re: float
    im: float
    multiplicity: int
    projector: MatrixPayload


class SpectralMeasurePayload(BaseModel):
    kind: SpectralKind
    dim: int
    points: list[SpectralPoint]

    @classmethod
    def from_measure(cls, measure: SpectralMeasure) -> SpectralMeasurePayload:
        points = [
            SpectralPoint(
                re=float(value.real),
                im=float(value.imag),
                multiplicity=int((measure.labels == index).sum()),
                projector=MatrixPayload.from_array(projector),
            )
            for index, (value, projector) in enumerate(measure.points)
        ]
        return cls(kind=measure.kind, dim=measure.dim, points=points)

    def to_measure(self) -> SpectralMeasure:
        values = [complex(point.re, point.im) for point in self.points]
        projectors = [point.projector.to_array() for point in self.points]
        return SpectralMeasure.from_points(self.kind, values, projectors)
