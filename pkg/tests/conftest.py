"""Pytest configuration and fixtures."""

import logging
import sys
from collections.abc import Iterator
from importlib.util import find_spec
from pathlib import Path

import numpy as np
import pytest

REQUIRED_MODULES = ["numpy", "scipy", "pydantic", "pandas", "rich", "loguru"]


def pytest_configure(config: pytest.Config) -> None:
    missing = [module for module in REQUIRED_MODULES if find_spec(module) is None]
    if missing:
        print(
            f"\n❌ Missing required modules: {', '.join(missing)}\n"
            f"💡 Please run: uv sync --extra dev\n"
            f"   Then use: uv run python -m pytest\n",
            file=sys.stderr,
        )
        pytest.exit("missing test dependencies", returncode=1)


@pytest.fixture
def rng() -> np.random.Generator:
    """Deterministic generator; every test gets a fresh stream."""
    return np.random.default_rng(0x5EED)


@pytest.fixture
def isolated_settings(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Point logs and artifacts of the shared settings object into tmp_path."""
    from src.app.settings import settings

    monkeypatch.chdir(tmp_path)
    monkeypatch.setattr(settings, "log_dir", tmp_path / "logs")
    monkeypatch.setattr(settings, "output_dir", tmp_path / "artifacts")
    monkeypatch.setattr(settings, "trial_workers", 1)
    return tmp_path


@pytest.fixture
def restore_logging() -> Iterator[None]:
    """Undo setup_logging: drop its handlers and put pytest's capture handlers back."""
    root = logging.getLogger()
    handlers = root.handlers[:]
    level = root.level
    yield
    for handler in root.handlers[:]:
        if handler not in handlers:
            root.removeHandler(handler)
            handler.close()
    for handler in handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    root.setLevel(level)
    logging.captureWarnings(False)
