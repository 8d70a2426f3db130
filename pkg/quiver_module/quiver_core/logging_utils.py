"""
Logging helpers for the quiver toolkit.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Optional


LOGGER_NAME = "quiver"


def configure_logging(log_path: Optional[Path] = None, level: str = "WARNING") -> logging.Logger:
    """Initialise the ``quiver`` logger: stderr always, plus *log_path* when given."""
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level.upper())
    for handler in list(logger.handlers):
        handler.close()
    logger.handlers.clear()

    formatter = logging.Formatter("%(asctime)s %(levelname)s %(message)s")

    if log_path is not None:
        log_path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_path, mode="w", encoding="utf-8")
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    # results go to stdout, so the stream handler stays on stderr
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    logger.addHandler(stream_handler)

    return logger
