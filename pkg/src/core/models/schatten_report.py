from __future__ import annotations

import math
from enum import Enum

from pydantic import BaseModel, field_serializer, field_validator

from src.matcore.schatten import format_exponent, parse_exponent


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NA = "n/a"


class BoundKind(str, Enum):
    HAAGERUP_RIGHT_HS = "haagerup-right-hs"
    HAAGERUP_LEFT_HS = "haagerup-left-hs"
    HAAGERUP_RIGHT = "haagerup-right"
    HAAGERUP_LEFT = "haagerup-left"
    HAAGERUP_BOTH = "haagerup-both"
    FIRST_KIND = "first-kind"
    SECOND_KIND = "second-kind"
    CLASS_C = "class-c"


class SchattenReport(BaseModel):
    context: str
    kind: BoundKind
    p: float
    q: float | None = None
    r: float
    measured: float
    bound: float
    verdict: Verdict

    @field_validator("p", "q", "r", mode="before")
    @classmethod
    def parse_exponents(cls, v: object) -> object:
        if v is None:
            return None
        if isinstance(v, (str, int, float)):
            return parse_exponent(v)
        return v

    @field_serializer("p", "q", "r")
    def serialize_exponent(self, value: float | None) -> str | None:
        return None if value is None else format_exponent(value)

    @property
    def ratio(self) -> float:
        if self.bound == 0.0:
            return 0.0 if self.measured == 0.0 else math.inf
        return self.measured / self.bound

    def to_row(self) -> dict[str, object]:
        return {
            "context": self.context,
            "kind": self.kind.value,
            "p": format_exponent(self.p),
            "q": "" if self.q is None else format_exponent(self.q),
            "r": format_exponent(self.r),
            "measured": self.measured,
            "bound": self.bound,
            "verdict": self.verdict.value,
        }
