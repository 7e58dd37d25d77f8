"""Logging utilities for holeburn."""

from __future__ import annotations

import logging
from typing import Any

import numpy as np

from ..const import DEFAULT_LOG_LEVEL, PACKAGE

# Vectors shorter than this are logged in full
_INLINE_ARRAY_LIMIT = 8


def compact(data: Any) -> Any:
    """Shorten numerical payloads before they reach a log line.

    Args:
        data: Log argument (array, complex, scalar, str, None, etc.)

    Returns:
        - Large numpy arrays: a one-line shape/dtype/norm summary
        - Complex scalars: a fixed-width string
        - Other types: passed through unchanged, so %d/%f formats keep working

    """
    if isinstance(data, np.ndarray):
        if data.size <= _INLINE_ARRAY_LIMIT:
            return np.array2string(data, precision=6)
        return (
            f"ndarray(shape={data.shape}, dtype={data.dtype}, "
            f"norm={float(np.linalg.norm(data)):.6g})"
        )
    if isinstance(data, complex | np.complexfloating):
        return f"({data.real:.6g}{data.imag:+.6g}j)"
    return data


class ArraySummaryFilter(logging.Filter):
    """Filter to keep Fock vectors and moment tables out of log lines."""

    def filter(self, record: logging.LogRecord) -> bool:
        """Compact the arguments of the log record."""
        if record.args and isinstance(record.args, tuple):
            record.args = tuple(compact(arg) for arg in record.args)
        return True


# Global state to track desired log level for newly created loggers
_CURRENT_PACKAGE_LOG_LEVEL: int = getattr(logging, DEFAULT_LOG_LEVEL, logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """Get a logger with the array summary filter attached."""
    logger = logging.getLogger(name)
    if not any(isinstance(f, ArraySummaryFilter) for f in logger.filters):
        logger.addFilter(ArraySummaryFilter())
    if name.startswith(PACKAGE):
        logger.setLevel(_CURRENT_PACKAGE_LOG_LEVEL)
    return logger


_LOGGER = get_logger(__name__)


def set_log_level(level: str) -> None:
    """Synchronize log levels for all holeburn loggers."""
    global _CURRENT_PACKAGE_LOG_LEVEL  # noqa: PLW0603
    log_level = getattr(logging, level.upper(), logging.INFO)
    _CURRENT_PACKAGE_LOG_LEVEL = log_level

    logging.getLogger(PACKAGE).setLevel(log_level)
    for name in logging.root.manager.loggerDict:
        if name.startswith(PACKAGE):
            logging.getLogger(name).setLevel(log_level)

    _LOGGER.info("holeburn log level synchronized to: %s", level.upper())
