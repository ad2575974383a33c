import math

from pydantic import BaseModel, field_serializer, field_validator

from src.core.models.schatten_report import Verdict
from src.matcore.schatten import format_exponent, parse_exponent

SCAN_COLUMNS = ("family", "N", "p", "epsilon", "measured", "predicted", "bound", "verdict", "ratio")


class ScanRecord(BaseModel):
    family: str
    N: int
    p: float
    epsilon: float | None = None
    measured: float
    predicted: float | None = None
    bound: float | None = None
    verdict: Verdict = Verdict.NA
    # kept in JSON artifacts, not in the CSV table
    difference_norm: float | None = None
    perturbation_norm: float | None = None
    besov_residual: float | None = None

    @field_validator("p", mode="before")
    @classmethod
    def parse_p(cls, v: object) -> object:
        if isinstance(v, (str, int, float)):
            return parse_exponent(v)
        return v

    @field_serializer("p")
    def serialize_p(self, value: float) -> str:
        return format_exponent(value)

    @property
    def ratio(self) -> float | None:
        """measured / bound, None without a bound."""
        if self.bound is None:
            return None
        if self.bound == 0.0:
            return 0.0 if self.measured == 0.0 else math.inf
        return self.measured / self.bound

    def to_row(self) -> dict[str, object]:
        return {
            "family": self.family,
            "N": self.N,
            "p": format_exponent(self.p),
            "epsilon": self.epsilon,
            "measured": self.measured,
            "predicted": self.predicted,
            "bound": self.bound,
            "verdict": self.verdict.value,
            "ratio": self.ratio,
        }
