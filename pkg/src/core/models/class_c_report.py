from pydantic import BaseModel, field_serializer

from src.core.models.schatten_report import Verdict
from src.matcore.schatten import format_exponent


class ClassCReport(BaseModel):
    p: float
    class_norm: float
    measured: float
    telescoped_bound: float
    perturbation: float
    estimate: float
    ratio: float
    audit_constant: float
    verdict: Verdict

    @field_serializer("p")
    def serialize_p(self, value: float) -> str:
        return format_exponent(value)
