import json
import logging
from pathlib import Path

import pytest

from src.utils.logging_setup import setup_logging

pytestmark = [pytest.mark.unit, pytest.mark.usefixtures("restore_logging")]


def _flush() -> None:
    for handler in logging.getLogger().handlers:
        handler.flush()


def test_log_files_are_json_lines(tmp_path: Path) -> None:
    directory = setup_logging(log_dir=tmp_path / "logs")

    logging.getLogger("src.runtime.jobs").debug("Stage end: scan", extra={"stage": "scan", "duration_ms": 1.5})
    logging.getLogger("src.divdiff").warning("Falling back to central differences")
    _flush()

    lines = [json.loads(line) for line in (directory / "lab.log").read_text(encoding="utf-8").splitlines()]
    assert lines[0]["message"] == "Stage end: scan"
    assert lines[0]["stage"] == "scan"
    assert lines[0]["duration_ms"] == 1.5
    assert lines[1]["level"] == "WARNING"

    numerics = (directory / "numerics.log").read_text(encoding="utf-8").splitlines()
    assert len(numerics) == 1
    assert json.loads(numerics[0])["logger"] == "src.divdiff"


def test_setup_is_idempotent(tmp_path: Path) -> None:
    setup_logging(log_dir=tmp_path)
    setup_logging(log_dir=tmp_path, verbose=True)

    assert len(logging.getLogger().handlers) == 3


def test_loguru_records_are_forwarded(tmp_path: Path) -> None:
    from loguru import logger

    directory = setup_logging(log_dir=tmp_path)
    logger.info("Preflight: 8 physical cores")
    _flush()

    assert "Preflight: 8 physical cores" in (directory / "lab.log").read_text(encoding="utf-8")


def test_unserializable_extras_are_stringified(tmp_path: Path) -> None:
    directory = setup_logging(log_dir=tmp_path)

    logging.getLogger("src").info("shape", extra={"shape": {1, 2}, "ratio": float("nan")})
    _flush()

    line = json.loads((directory / "lab.log").read_text(encoding="utf-8").splitlines()[-1])
    assert line["shape"] == "{1, 2}"
    assert line["ratio"] == "nan"
