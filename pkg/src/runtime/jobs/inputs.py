from __future__ import annotations

from pathlib import Path

from pydantic import ValidationError

from src.core.errors import NonFiniteEntries, OperatorLabError
from src.core.models.matrix_payload import MatrixPayload
from src.core.models.trig_poly_payload import TrigPolyPayload
from src.funcalc.functions import TrigPoly, TrigPoly1D
from src.matcore.dense import DenseMatrix


class InputFileError(OperatorLabError, ValueError):
    """An input file named by a CLI flag could not be read or validated."""

    def __init__(self, flag: str, message: str) -> None:
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _read(path: Path, flag: str) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputFileError(flag, f"cannot read {path}: {e.strerror or e}") from e


def load_matrix(path: Path, flag: str) -> DenseMatrix:
    try:
        return MatrixPayload.model_validate_json(_read(path, flag)).to_array()
    except (ValidationError, NonFiniteEntries) as e:
        raise InputFileError(flag, f"{path} is not a valid matrix file: {e}") from e


def load_trig_poly(path: Path, flag: str) -> TrigPoly | TrigPoly1D:
    try:
        return TrigPolyPayload.model_validate_json(_read(path, flag)).to_function()
    except (ValidationError, ValueError) as e:
        raise InputFileError(flag, f"{path} is not a valid trigonometric polynomial file: {e}") from e
