import json
from collections.abc import Callable
from pathlib import Path
from typing import Any

import numpy as np
import pytest

from src.core.models.matrix_payload import MatrixPayload
from src.runtime.config import RuntimeConfig
from src.storage.artifacts.artifact_store import ArtifactStore


@pytest.fixture
def runtime(tmp_path: Path) -> RuntimeConfig:
    return RuntimeConfig(output_dir=tmp_path / "artifacts", plane_fft_size=256, plane_besov_depth=8)


@pytest.fixture
def store(runtime: RuntimeConfig) -> ArtifactStore:
    return ArtifactStore(runtime.output_dir)


@pytest.fixture
def write_matrix(tmp_path: Path) -> Callable[[str, Any], Path]:
    def write(name: str, matrix: Any) -> Path:
        path = tmp_path / name
        path.write_text(MatrixPayload.from_array(np.asarray(matrix)).model_dump_json(), encoding="utf-8")
        return path

    return write


@pytest.fixture
def write_trig_poly(tmp_path: Path) -> Callable[[str, list[float], list[dict[str, Any]]], Path]:
    def write(name: str, periods: list[float], terms: list[dict[str, Any]]) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps({"periods": periods, "terms": terms}), encoding="utf-8")
        return path

    return write
