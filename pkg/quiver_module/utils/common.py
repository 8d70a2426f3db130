from __future__ import annotations

import time
from functools import wraps
from typing import List, Optional, Tuple


def _truthy(value: str | None) -> bool:
    """Return True when *value* represents a truthy string."""

    if value is None:
        return False
    return value.strip().lower() in {"1", "true", "yes", "on"}


def parse_int_list(text: Optional[str]) -> Tuple[int, ...]:
    """Parse "1,3,4" (spaces allowed) into a tuple; None or blank gives ()."""

    if text is None or not text.strip():
        return ()
    values: List[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            values.append(int(part))
        except ValueError as exc:
            raise ValueError(f"Not an integer list: {text!r}") from exc
    return tuple(values)


def timing_decorator(func):
    """Log how long *func* took through the ``logger`` keyword argument, if one is passed."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        logger = kwargs.get("logger")
        start_time = time.perf_counter()
        result = func(*args, **kwargs)
        elapsed = time.perf_counter() - start_time

        if logger:
            logger.info("⏱️  %s took %.3f seconds", func.__name__, elapsed)

        return result

    return wrapper
