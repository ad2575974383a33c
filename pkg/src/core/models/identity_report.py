from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field

from src.core.models.schatten_report import Verdict


class IdentityKind(str, Enum):
    PAIR = "pair"
    UNITARY = "unitary"
    BASE_POINT = "base-point"

    @property
    def number(self) -> str:
        return _NUMBERS[self]

    @classmethod
    def _missing_(cls, value: object) -> IdentityKind | None:
        if isinstance(value, str):
            for kind, number in _NUMBERS.items():
                if value.strip() == number:
                    return kind
        return None

    @classmethod
    def selectors(cls) -> list[str]:
        """Names and numbers accepted by `verify`, e.g. "pair" or "7.1"."""
        return [kind.value for kind in cls] + [kind.number for kind in cls]


_NUMBERS = {
    IdentityKind.PAIR: "7.1",
    IdentityKind.UNITARY: "12.1",
    IdentityKind.BASE_POINT: "10.2",
}


class IdentityReport(BaseModel):
    identity: IdentityKind
    dim: int
    residual: float
    first_residual: float
    second_residual: float
    tolerance: float
    verdict: Verdict
    # Schatten exponent label -> ‖f(A,B) − f(αI,βI)‖_p / max perturbation (base point only)
    lipschitz_ratios: dict[str, float] = Field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        return max(self.residual, self.first_residual, self.second_residual)


class IdentitySummary(BaseModel):
    identity: IdentityKind
    trials: int
    max_residual: float
    max_first_residual: float
    max_second_residual: float
    tolerance: float
    verdict: Verdict
