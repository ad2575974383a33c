from __future__ import annotations

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

import psutil

from src.utils.logging import get_logger

logger = get_logger(__name__)

T = TypeVar("T")


class TrialRunner:
    """
    Runs independent trials on a thread pool; numpy's LAPACK calls release the GIL.

    Results come back in trial-index order, so outputs do not depend on the worker count.
    Every trial owns its random stream, which is derived from the trial index alone.
    """

    def __init__(self, workers: int = 1) -> None:
        self.workers = max(1, workers)

    def __call__(self, trial: Callable[[int], T], count: int) -> list[T]:
        if self.workers == 1 or count <= 1:
            return [trial(index) for index in range(count)]

        logger.debug(f"Running {count} trials on {self.workers} workers")
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(trial, range(count)))


def default_worker_count() -> int:
    """Physical cores when psutil knows them, else logical ones."""
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
