from __future__ import annotations

import json
import math
from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, field_serializer, field_validator, model_validator

from src.core.models.identity_report import IdentityKind
from src.core.models.schatten_report import BoundKind
from src.matcore.schatten import format_exponent, parse_exponent
from src.matcore.spectral import SpectralKind

DEFAULT_SEED = 0x5EED


class Command(str, Enum):
    DECOMPOSE = "decompose"
    APPLY = "apply"
    VERIFY = "verify"
    COUNTEREXAMPLE = "counterexample"
    SCAN = "scan"
    BESOV = "besov"
    AUDIT = "audit"


class ScanFamily(str, Enum):
    COUNTEREXAMPLE = "counterexample"
    RANDOM_TRIGPOLY = "random-trigpoly"
    CLASS_C = "class-c"
    UNITARY_TRIGPOLY = "unitary-trigpoly"
    REGIME_PROBE = "regime-probe"


class MissingInputs(ValueError):
    def __init__(self, command: Command, fields: list[str]) -> None:
        super().__init__(f"{command.value} needs a nonempty {', '.join(fields)}")
        self.fields = fields


def _split(value: Any) -> Any:
    if isinstance(value, str):
        return [item.strip() for item in value.split(",") if item.strip()]
    return value


class RunConfig(BaseModel):
    """Resolved settings of one CLI invocation; a JSON config file mirrors these fields."""

    command: Command
    identity: IdentityKind | None = None

    # --- Inputs ---
    matrix: Path | None = None
    matrix_b: Path | None = None
    trigpoly: Path | None = None
    spectral_kind: SpectralKind = SpectralKind.HERMITIAN

    # --- Grids ---
    n_list: list[int] = Field(default_factory=list)
    p_list: list[float] = Field(default_factory=list)
    epsilon_list: list[float] = Field(default_factory=list)
    dims: list[int] = Field(default_factory=list)
    trials: int = Field(default=1, ge=1)

    # --- Experiment knobs ---
    family: ScanFamily | None = None
    bound_kind: BoundKind | None = None
    q: float | None = None
    alpha: float = 0.0
    beta: float = 0.0
    besov_scale: int = 0

    # --- Run ---
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64)
    tolerance: float | None = Field(default=None, gt=0.0)
    output_dir: Path | None = None
    workers: int | None = Field(default=None, ge=0)

    @field_validator("seed", mode="before")
    @classmethod
    def parse_seed(cls, v: Any) -> Any:
        if isinstance(v, str):
            return int(v, 0)
        return v

    @field_validator("identity", mode="before")
    @classmethod
    def parse_identity(cls, v: Any) -> Any:
        if isinstance(v, str) and not isinstance(v, IdentityKind):
            return IdentityKind(v)
        return v

    @field_validator("n_list", "dims", "epsilon_list", mode="before")
    @classmethod
    def parse_lists(cls, v: Any) -> Any:
        return _split(v)

    @field_validator("p_list", mode="before")
    @classmethod
    def parse_p_list(cls, v: Any) -> Any:
        items = _split(v)
        if isinstance(items, list):
            return [parse_exponent(item) for item in items]
        return items

    @field_validator("q", mode="before")
    @classmethod
    def parse_q(cls, v: Any) -> Any:
        if v is None or v == "":
            return None
        return parse_exponent(v)

    @field_validator("n_list", "dims")
    @classmethod
    def check_sizes(cls, v: list[int]) -> list[int]:
        if any(n < 1 for n in v):
            raise ValueError(f"sizes must be positive, got {v}")
        return v

    @field_validator("epsilon_list")
    @classmethod
    def check_epsilons(cls, v: list[float]) -> list[float]:
        if any(not math.isfinite(e) or e <= 0.0 for e in v):
            raise ValueError(f"epsilon values must be positive and finite, got {v}")
        return v

    @field_serializer("p_list")
    def serialize_p_list(self, value: list[float]) -> list[str]:
        return [format_exponent(p) for p in value]

    @field_serializer("q")
    def serialize_q(self, value: float | None) -> str | None:
        return None if value is None else format_exponent(value)

    @model_validator(mode="after")
    def check_command_inputs(self) -> RunConfig:
        missing = self.missing_fields()
        if missing:
            raise MissingInputs(self.command, missing)
        return self

    def missing_fields(self) -> list[str]:
        required: dict[Command, tuple[str, ...]] = {
            Command.DECOMPOSE: ("matrix",),
            Command.APPLY: ("matrix", "matrix_b", "trigpoly"),
            Command.VERIFY: ("identity", "dims"),
            Command.COUNTEREXAMPLE: ("n_list", "p_list"),
            Command.SCAN: ("family", "n_list", "p_list"),
            Command.BESOV: ("trigpoly",),
            Command.AUDIT: ("bound_kind", "dims", "p_list"),
        }
        names = required[self.command]
        if self.command == Command.VERIFY and self.matrix is not None:
            # base-point checks on given matrices replace the random trials
            names = ("identity", "matrix_b", "trigpoly")
        return [name for name in names if getattr(self, name) in (None, [])]

    @classmethod
    def resolve(
        cls,
        flags: dict[str, Any],
        config_file: Path | None = None,
        defaults: dict[str, Any] | None = None,
    ) -> RunConfig:
        """Explicit flags override the JSON config file, which overrides ``defaults``."""
        values: dict[str, Any] = dict(defaults or {})
        if config_file is not None:
            values.update(json.loads(config_file.read_text(encoding="utf-8")))
        values.update({key: value for key, value in flags.items() if value is not None})
        return cls.model_validate(values)
