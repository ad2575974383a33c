import json
import re
from collections.abc import Iterable, Mapping, Sequence
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import pandas as pd
from pydantic import BaseModel

UTC = timezone.utc

# 17 significant digits round-trip every float64
CSV_FLOAT_FORMAT = "%.17g"

_RUN_ID = re.compile(r"^[A-Za-z0-9_.-]+$")


def new_run_id(command: str, now: datetime | None = None) -> str:
    stamp = (now or datetime.now(UTC)).strftime("%Y%m%dT%H%M%S%f")
    return f"{command}_{stamp}"


def _jsonable(data: Any) -> Any:
    if isinstance(data, BaseModel):
        return data.model_dump(mode="json")
    if isinstance(data, Mapping):
        return {key: _jsonable(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [_jsonable(item) for item in data]
    return data


class ArtifactStore:
    """One directory per run under OUTPUT_DIR; a single writer per run."""

    def __init__(self, base_dir: Path) -> None:
        self.base_dir = base_dir

    def run_dir(self, run_id: str) -> Path:
        if not _RUN_ID.match(run_id):
            raise ValueError(f"run id {run_id!r} is not a plain directory name")
        return self.base_dir / f"run_{run_id}"

    def _target(self, run_id: str, filename: str) -> Path:
        directory = self.run_dir(run_id)
        directory.mkdir(parents=True, exist_ok=True)
        return directory / filename

    def save_json(self, run_id: str, filename: str, data: Any) -> Path:
        """Pydantic models are dumped in JSON mode, so exponents keep their "inf" labels."""
        file_path = self._target(run_id, filename)
        with open(file_path, "w", encoding="utf-8") as f:
            json.dump(_jsonable(data), f, indent=2, ensure_ascii=False)
        return file_path

    def save_csv(
        self,
        run_id: str,
        filename: str,
        rows: Iterable[Mapping[str, object]],
        columns: Sequence[str],
    ) -> Path:
        """Rows in the given column order; missing values are written as empty fields."""
        file_path = self._target(run_id, filename)
        frame = pd.DataFrame(list(rows), columns=list(columns))
        frame.to_csv(file_path, index=False, float_format=CSV_FLOAT_FORMAT, na_rep="", lineterminator="\n")
        return file_path
