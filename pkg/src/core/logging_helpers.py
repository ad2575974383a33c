import logging
import time
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any

from src.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class StageTiming:
    stage: str
    context: dict[str, Any] = field(default_factory=dict)
    duration_ms: float | None = None
    failed: bool = False


def _describe(context: dict[str, Any]) -> str:
    return ", ".join(f"{key}={value}" for key, value in context.items())


@contextmanager
def stage_timer(stage: str, **context: Any) -> Iterator[StageTiming]:
    """
    Time one numerical stage of a job, e.g. ``with stage_timer("decompose", dim=64):``.

    The keyword context goes into the message and, as structured fields, into the JSON
    log lines. A stage left by an exception is logged at WARNING with ``failed=True``.
    """
    timing = StageTiming(stage=stage, context=context)
    suffix = f" ({_describe(context)})" if context else ""
    logger.debug(f"Stage start: {stage}{suffix}", extra={"stage": stage, **context})
    start = time.perf_counter()
    try:
        yield timing
    except BaseException:
        timing.failed = True
        raise
    finally:
        timing.duration_ms = (time.perf_counter() - start) * 1000.0
        logger.log(
            logging.WARNING if timing.failed else logging.DEBUG,
            f"Stage end: {stage}, {timing.duration_ms:.1f}ms{suffix}",
            extra={"stage": stage, "duration_ms": round(timing.duration_ms, 3), "failed": timing.failed, **context},
        )
