from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np
import psutil
import scipy

if TYPE_CHECKING:
    from loguru import Logger

    from src.app.settings import Settings


def run_preflight(settings: Settings, logger: Logger, verbose: bool = False) -> None:
    """
    Report the numerical environment before a run:
    1. numpy / scipy versions
    2. physical cores and available memory (psutil)
    3. whether OUTPUT_DIR accepts writes

    This function is safe: any errors are logged but never stop the run.
    """
    try:
        if verbose:
            logger.info(f"→ numpy {np.__version__}, scipy {scipy.__version__}")

        cores = psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
        available_gb = psutil.virtual_memory().available / 1024**3
        logger.debug(f"Preflight: {cores} physical cores, {available_gb:.1f} GB available")
        if verbose:
            logger.info(f"✓ {cores} cores, {available_gb:.1f} GB free memory")

        if _is_writable(Path(settings.output_dir)):
            if verbose:
                logger.info(f"✓ Output directory writable: {settings.output_dir}")
        else:
            logger.warning(f"Preflight: output directory {settings.output_dir} is not writable")

    except Exception as e:
        logger.error(f"Preflight: Unexpected error: {e}, continuing with run")


def _is_writable(directory: Path) -> bool:
    try:
        directory.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile(dir=directory, prefix=".preflight-"):
            pass
    except OSError:
        return False
    return os.access(directory, os.W_OK)
