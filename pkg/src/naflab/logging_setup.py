"""Logging helpers for naflab.

Records go to stderr; stdout holds command results. Pool workers of ``map`` are
set up by :func:`worker_initializer` and tag their records with the process name.
"""

from __future__ import annotations

import logging
import os
import sys
from typing import TextIO

_ANSI_YELLOW = "\x1b[33m"
_ANSI_RESET = "\x1b[0m"
LOG_FORMAT = "%(asctime)s %(levelname)s [%(processName)s %(name)s] %(message)s"
DEFAULT_LEVEL = logging.WARNING


def _supports_ansi(stream: object) -> bool:
    isatty = getattr(stream, "isatty", None)
    if not callable(isatty) or not isatty():
        return False
    if os.environ.get("NO_COLOR") is not None:
        return False
    term = str(os.environ.get("TERM", "")).strip().lower()
    return term not in {"", "dumb"}


class _WarningColorFormatter(logging.Formatter):
    def __init__(self, fmt: str, *, color_warnings: bool) -> None:
        super().__init__(fmt)
        self._color_warnings = color_warnings

    def format(self, record: logging.LogRecord) -> str:
        rendered = super().format(record)
        if self._color_warnings and record.levelno == logging.WARNING:
            return f"{_ANSI_YELLOW}{rendered}{_ANSI_RESET}"
        return rendered


def resolve_level(level: str | int | None) -> int | None:
    """Numeric level for a name such as ``info``; None when the name is unknown."""
    if level is None:
        return DEFAULT_LEVEL
    if isinstance(level, int):
        return level
    numeric = logging.getLevelName(level.strip().upper())
    return numeric if isinstance(numeric, int) else None


def configure_logging(level: str | int | None, *, stream: TextIO | None = None) -> int:
    """Route records at ``level`` and above to ``stream`` (stderr); returns the level used."""
    numeric_level = resolve_level(level)
    unknown = numeric_level is None
    if unknown:
        numeric_level = DEFAULT_LEVEL
    root = logging.getLogger()
    root.setLevel(numeric_level)
    root.handlers.clear()

    handler = logging.StreamHandler(sys.stderr if stream is None else stream)
    handler.setLevel(numeric_level)
    handler.setFormatter(
        _WarningColorFormatter(LOG_FORMAT, color_warnings=_supports_ansi(handler.stream))
    )
    root.addHandler(handler)
    if unknown:
        logging.getLogger(__name__).warning(
            "Unknown log level %r; using %s", level, logging.getLevelName(DEFAULT_LEVEL)
        )
    return numeric_level


def worker_initializer(level: int) -> None:
    """Pool initializer for ``map`` workers."""
    configure_logging(level)
