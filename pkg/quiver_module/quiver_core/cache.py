"""
On-disk cache of rendered command output.

Each entry is one JSON file named by the sha256 of the canonical request, so
a cache hit returns exactly the bytes the cold computation printed.
"""

from __future__ import annotations

import contextlib
import hashlib
import logging
import os
import tempfile
from pathlib import Path
from typing import Mapping, Optional

from pydantic import ValidationError

from .serialization import CacheEntryModel, CacheRequestModel, dump

LOGGER = logging.getLogger("quiver.cache")


def canonical_request(command: str, args: Mapping[str, object], json_output: bool) -> CacheRequestModel:
    return CacheRequestModel(
        command=command,
        args={name: str(args[name]) for name in sorted(args)},
        json_output=json_output,
    )


def request_key(request: CacheRequestModel) -> str:
    return hashlib.sha256(dump(request).encode("utf-8")).hexdigest()


class OutputCache:
    """Read-through cache; a missing directory or unreadable entry behaves as a miss."""

    def __init__(self, root: Optional[Path]) -> None:
        self.root = root

    @property
    def enabled(self) -> bool:
        return self.root is not None

    def _path(self, key: str) -> Path:
        assert self.root is not None
        return self.root / f"{key}.json"

    def load(self, request: CacheRequestModel) -> Optional[str]:
        if not self.enabled:
            return None
        key = request_key(request)
        path = self._path(key)
        if not path.exists():
            return None
        try:
            entry = CacheEntryModel.model_validate_json(path.read_text(encoding="utf-8"))
        except (OSError, ValidationError) as exc:
            LOGGER.warning("Ignoring unreadable cache entry %s: %s", path.name, exc)
            return None
        if entry.key != key or entry.request != request:
            LOGGER.warning("Ignoring cache entry %s: request mismatch", path.name)
            return None
        LOGGER.info("Cache hit for %s (%s)", request.command, key[:12])
        return entry.output

    def store(self, request: CacheRequestModel, output: str) -> None:
        if not self.enabled:
            return
        key = request_key(request)
        path = self._path(key)
        temp_name: Optional[str] = None
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            handle, temp_name = tempfile.mkstemp(prefix=f".{key[:12]}-", suffix=".tmp", dir=path.parent)
            with os.fdopen(handle, "w", encoding="utf-8") as temp_file:
                temp_file.write(dump(CacheEntryModel(key=key, request=request, output=output)))
            os.replace(temp_name, path)
        except OSError as exc:
            if temp_name is not None:
                with contextlib.suppress(OSError):
                    os.unlink(temp_name)
            LOGGER.warning("Could not write cache entry %s: %s", path.name, exc)
            return
        LOGGER.debug("Stored cache entry %s", path.name)
