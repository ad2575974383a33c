"""
RuntimeConfig contains only the configuration fields needed by the runtime layer.

Jobs and experiments read numerical knobs from here, never from src.app.settings.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any


@dataclass
class RuntimeConfig:
    """Configuration for the runtime layer."""

    output_dir: Path = field(default_factory=lambda: Path("artifacts"))

    # Spectral decomposition
    cluster_rel: float = 1e-8
    normality_rel: float = 1e-10

    # Divided differences
    sinc_node_margin: float = 10.0

    # Audits and verdicts
    audit_margin: float = 1e-9
    audit_atol: float = 1e-13
    identity_tolerance: float = 1e-8
    class_c_audit_constant: float = 16.0

    # Besov norms
    sup_grid_oversampling: int = 8
    plane_fft_size: int = 1024
    plane_besov_depth: int = 12

    # Trials
    seed: int = 0x5EED
    workers: int = 1

    def with_overrides(self, **overrides: Any) -> RuntimeConfig:
        """Copy with the per-run values that were actually given (None means keep)."""
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})
