from __future__ import annotations

import json
import logging
from datetime import datetime, timezone
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any

from rich.logging import RichHandler

from src.app.settings import settings

UTC = timezone.utc

LOG_FILE_BYTES = 5 * 1024 * 1024
LOG_FILE_BACKUPS = 5

# attributes every LogRecord carries; anything else came in through ``extra``
_RECORD_ATTRIBUTES = frozenset(vars(logging.LogRecord("", 0, "", 0, "", None, None))) | {"message", "asctime"}


def _json_value(value: Any) -> Any:
    if isinstance(value, float) and value != value:
        return "nan"
    try:
        json.dumps(value)
    except (TypeError, ValueError):
        return repr(value)
    return value


def record_context(record: logging.LogRecord) -> dict[str, Any]:
    """Structured fields attached through ``extra=`` (stage names, durations, sizes)."""
    return {
        key: _json_value(value)
        for key, value in vars(record).items()
        if key not in _RECORD_ATTRIBUTES and not key.startswith("_")
    }


class JsonLinesFormatter(logging.Formatter):
    """One JSON object per record; ``extra`` fields become top-level keys."""

    def format(self, record: logging.LogRecord) -> str:
        payload: dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created, tz=UTC).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "function": record.funcName,
            "line": record.lineno,
            "thread": record.threadName,
            **record_context(record),
        }
        if record.exc_info:
            payload["traceback"] = self.formatException(record.exc_info)
        return json.dumps(payload, ensure_ascii=False)


def _file_handler(path: Path, level: int) -> RotatingFileHandler:
    handler = RotatingFileHandler(
        filename=str(path),
        maxBytes=LOG_FILE_BYTES,
        backupCount=LOG_FILE_BACKUPS,
        encoding="utf-8",
    )
    handler.setLevel(level)
    handler.setFormatter(JsonLinesFormatter())
    return handler


def _loguru_sink(message: Any) -> None:
    """Forward loguru records (preflight) into standard logging."""
    record = message.record
    context = {key: value for key, value in record["extra"].items() if key not in _RECORD_ATTRIBUTES}
    exception = record["exception"]
    exc_info = None if exception is None else (exception.type, exception.value, exception.traceback)
    logging.getLogger(record["name"] or "loguru").log(
        record["level"].no, record["message"], extra=context, exc_info=exc_info
    )


def setup_logging(*, verbose: bool = False, log_dir: Path | None = None) -> Path:
    """
    Route every record of a run to:
    - the console through rich (LOG_CONSOLE_LEVEL, DEBUG when verbose)
    - LOG_DIR/lab.log as JSON lines, DEBUG and up, stage timings included
    - LOG_DIR/numerics.log, WARNING and up: fallbacks, tolerance misses, numpy warnings

    Safe to call more than once; handlers from an earlier call are replaced.
    Returns the log directory.
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
        if isinstance(handler, logging.FileHandler):
            handler.close()

    directory = Path(log_dir or settings.log_dir)
    directory.mkdir(parents=True, exist_ok=True)
    root_logger.addHandler(_file_handler(directory / "lab.log", logging.DEBUG))
    root_logger.addHandler(_file_handler(directory / "numerics.log", logging.WARNING))

    console_level = logging.DEBUG if verbose else logging.getLevelName(settings.log_console_level)
    console_handler = RichHandler(
        level=console_level,
        show_time=False,
        show_level=verbose,
        show_path=False,
        markup=True,
    )
    console_handler.setFormatter(logging.Formatter("%(message)s"))
    root_logger.addHandler(console_handler)

    # numpy RuntimeWarnings (overflow, invalid value) end up in numerics.log
    logging.captureWarnings(True)

    from loguru import logger as loguru_logger

    loguru_logger.remove()
    loguru_logger.add(_loguru_sink, level="DEBUG")
    return directory
