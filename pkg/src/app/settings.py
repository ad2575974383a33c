from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Annotated

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # --- Application ---
    app_env: Annotated[str, Field(alias="APP_ENV")] = "development"

    # --- Output ---
    output_dir: Annotated[Path, Field(alias="OUTPUT_DIR")] = Path("artifacts")

    # --- Spectral decomposition ---
    spectral_cluster_rel: Annotated[float, Field(alias="SPECTRAL_CLUSTER_REL")] = 1e-8
    spectral_normality_rel: Annotated[float, Field(alias="SPECTRAL_NORMALITY_REL")] = 1e-10

    # --- Divided differences ---
    sinc_node_margin: Annotated[float, Field(alias="SINC_NODE_MARGIN")] = 10.0

    # --- Audits ---
    audit_margin: Annotated[float, Field(alias="AUDIT_MARGIN")] = 1e-9
    audit_atol: Annotated[float, Field(alias="AUDIT_ATOL")] = 1e-13
    identity_tolerance: Annotated[float, Field(alias="IDENTITY_TOLERANCE")] = 1e-8
    class_c_audit_constant: Annotated[float, Field(alias="CLASS_C_AUDIT_CONSTANT")] = 16.0

    # --- Besov ---
    sup_grid_oversampling: Annotated[int, Field(alias="SUP_GRID_OVERSAMPLING")] = 8
    plane_fft_size: Annotated[int, Field(alias="PLANE_FFT_SIZE")] = 1024
    plane_besov_depth: Annotated[int, Field(alias="PLANE_BESOV_DEPTH")] = 12

    # --- Experiments ---
    random_seed: Annotated[int, Field(alias="RANDOM_SEED")] = 0x5EED
    trial_workers: Annotated[int, Field(alias="TRIAL_WORKERS")] = 0

    # --- Logging ---
    log_dir: Annotated[Path, Field(alias="LOG_DIR")] = Path("logs")
    log_console_level: Annotated[str, Field(alias="LOG_CONSOLE_LEVEL")] = "INFO"

    @field_validator(
        "spectral_cluster_rel",
        "spectral_normality_rel",
        "sinc_node_margin",
        "audit_margin",
        "audit_atol",
        "identity_tolerance",
        "class_c_audit_constant",
        mode="before",
    )
    @classmethod
    def validate_positive(cls, value: float) -> float:
        float_value = float(value)
        if not float_value > 0.0:
            raise ValueError("Tolerance values must be positive")
        return float_value

    @field_validator("sup_grid_oversampling", mode="before")
    @classmethod
    def validate_oversampling(cls, value: int) -> int:
        int_value = int(value)
        if int_value < 8:
            raise ValueError("sup_grid_oversampling must be at least 8")
        return int_value

    @field_validator("plane_fft_size", mode="before")
    @classmethod
    def validate_fft_size(cls, value: int) -> int:
        int_value = int(value)
        if int_value < 64 or int_value & (int_value - 1):
            raise ValueError("plane_fft_size must be a power of two, at least 64")
        return int_value

    @field_validator("plane_besov_depth", mode="before")
    @classmethod
    def validate_depth(cls, value: int) -> int:
        int_value = int(value)
        if int_value < 1:
            raise ValueError("plane_besov_depth must be at least 1")
        return int_value

    @field_validator("random_seed", mode="before")
    @classmethod
    def validate_seed(cls, value: int | str) -> int:
        int_value = int(value, 0) if isinstance(value, str) else int(value)
        if not 0 <= int_value < 2**64:
            raise ValueError("random_seed must be a 64-bit unsigned integer")
        return int_value

    @field_validator("trial_workers", mode="before")
    @classmethod
    def validate_workers(cls, value: int) -> int:
        int_value = int(value)
        if int_value < 0:
            raise ValueError("trial_workers must be 0 (auto) or positive")
        return int_value

    @field_validator("output_dir", "log_dir", mode="before")
    @classmethod
    def _as_path(cls, value: str | Path) -> Path:
        if isinstance(value, Path):
            return value
        return Path(str(value))

    @field_validator("log_console_level", mode="before")
    @classmethod
    def validate_level(cls, value: str) -> str:
        normalized_value = str(value).strip().upper()
        if normalized_value not in {"DEBUG", "INFO", "WARNING", "ERROR"}:
            raise ValueError(f"Unsupported log level: {normalized_value}")
        return normalized_value

    def is_development(self) -> bool:
        return self.app_env.lower() == "development"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        env_prefix="",
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
