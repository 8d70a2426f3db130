"""Shared pytest fixtures for the quiver toolkit tests."""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Iterator

import pytest

ROOT_DIR = Path(__file__).resolve().parent.parent
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from combinatorics.permcore import Permutation  # noqa: E402


def pytest_configure(config) -> None:
    config.addinivalue_line("markers", "slow: long-running oracle suites (deselect with -m 'not slow')")


def _drop_handlers() -> None:
    logger = logging.getLogger("quiver")
    for handler in list(logger.handlers):
        handler.close()
        logger.removeHandler(handler)


@pytest.fixture(autouse=True)
def isolate_environment(monkeypatch, tmp_path) -> Iterator[None]:
    """Keep the environment and the ``quiver`` logger from leaking between tests."""
    for name in ("QUIVER_CACHE_DIR", "QUIVER_NO_CACHE", "QUIVER_WORKERS"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    _drop_handlers()
    yield
    _drop_handlers()


@pytest.fixture
def perm():
    """Shorthand parser: ``perm("312")``."""
    return Permutation.parse
