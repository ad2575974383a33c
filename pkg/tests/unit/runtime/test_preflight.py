from pathlib import Path
from types import SimpleNamespace
from unittest.mock import MagicMock, patch

import pytest

from src.runtime.preflight import run_preflight

pytestmark = pytest.mark.unit


def test_preflight_reports_environment_when_verbose(tmp_path: Path) -> None:
    logger = MagicMock()

    run_preflight(SimpleNamespace(output_dir=tmp_path / "out"), logger, verbose=True)  # type: ignore[arg-type]

    messages = " ".join(str(call.args[0]) for call in logger.info.call_args_list)
    assert "numpy" in messages
    assert "writable" in messages
    assert (tmp_path / "out").is_dir()
    logger.warning.assert_not_called()


def test_preflight_is_quiet_by_default(tmp_path: Path) -> None:
    logger = MagicMock()

    run_preflight(SimpleNamespace(output_dir=tmp_path), logger)  # type: ignore[arg-type]

    logger.info.assert_not_called()
    logger.debug.assert_called_once()


def test_preflight_warns_on_unwritable_output(tmp_path: Path) -> None:
    blocker = tmp_path / "file"
    blocker.write_text("", encoding="utf-8")
    logger = MagicMock()

    run_preflight(SimpleNamespace(output_dir=blocker / "artifacts"), logger)  # type: ignore[arg-type]

    logger.warning.assert_called_once()


def test_preflight_never_raises(tmp_path: Path) -> None:
    logger = MagicMock()

    with patch("src.runtime.preflight.psutil.virtual_memory", side_effect=RuntimeError("no /proc")):
        run_preflight(SimpleNamespace(output_dir=tmp_path), logger)  # type: ignore[arg-type]

    logger.error.assert_called_once()
