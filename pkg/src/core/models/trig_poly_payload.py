from __future__ import annotations

from pydantic import BaseModel, Field, field_validator, model_validator

from src.funcalc.functions import TrigPoly, TrigPoly1D


class TrigTerm(BaseModel):
    j: int
    k: int | None = None
    re: float
    im: float = 0.0


class TrigPolyPayload(BaseModel):
    """{"periods": [Lx] or [Lx, Ly], "terms": [{"j", "k", "re", "im"}, ...]}."""

    periods: list[float] = Field(min_length=1, max_length=2)
    terms: list[TrigTerm]

    @field_validator("periods")
    @classmethod
    def check_periods(cls, v: list[float]) -> list[float]:
        if any(period <= 0.0 for period in v):
            raise ValueError(f"periods must be positive, got {v}")
        return v

    @model_validator(mode="after")
    def check_terms(self) -> TrigPolyPayload:
        bivariate = len(self.periods) == 2
        for term in self.terms:
            if bivariate and term.k is None:
                raise ValueError(f"term j={term.j} needs a k index for a bivariate polynomial")
            if not bivariate and term.k is not None:
                raise ValueError(f"term j={term.j} has a k index but only one period was given")
        return self

    @property
    def bivariate(self) -> bool:
        return len(self.periods) == 2

    def to_function(self) -> TrigPoly | TrigPoly1D:
        coeffs = [complex(term.re, term.im) for term in self.terms]
        if self.bivariate:
            freqs = [[term.j, term.k] for term in self.terms]
            return TrigPoly.build(freqs, coeffs, (self.periods[0], self.periods[1]))
        return TrigPoly1D.build([term.j for term in self.terms], coeffs, self.periods[0])

    @classmethod
    def from_function(cls, f: TrigPoly | TrigPoly1D) -> TrigPolyPayload:
        if isinstance(f, TrigPoly1D):
            terms = [
                TrigTerm(j=int(j), re=float(c.real), im=float(c.imag)) for j, c in zip(f.freqs, f.coeffs)
            ]
            return cls(periods=[f.period], terms=terms)
        terms = [
            TrigTerm(j=int(j), k=int(k), re=float(c.real), im=float(c.imag))
            for (j, k), c in zip(f.freqs, f.coeffs)
        ]
        return cls(periods=list(f.periods), terms=terms)
