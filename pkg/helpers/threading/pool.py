# helpers/threading/pool.py
# Worker-count resolution and an order-preserving thread-pool map for sweeps and suites.

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Mapping, Optional, TypeVar

from helpers.validation import ValidationError, qpath

log = logging.getLogger(__name__)

THREADS_ENV = "WL2CERT_THREADS"

T = TypeVar("T")
R = TypeVar("R")


def worker_count(explicit: Optional[int] = None, *, env: Optional[Mapping[str, str]] = None) -> int:
    """
    Resolve the worker count.

    Precedence: explicit value, then WL2CERT_THREADS, then os.cpu_count().
    """
    if explicit is not None:
        if explicit < 1:
            raise ValidationError(f"{qpath('threads')} must be >= 1 (got {explicit})")
        return explicit
    env = os.environ if env is None else env
    raw = env.get(THREADS_ENV)
    if raw is not None and raw.strip():
        try:
            n = int(raw.strip())
        except ValueError:
            raise ValidationError(f"{THREADS_ENV} must be an int (got {raw!r})") from None
        if n < 1:
            raise ValidationError(f"{THREADS_ENV} must be >= 1 (got {n})")
        return n
    return os.cpu_count() or 1


def ordered_map(fn: Callable[[T], R], items: Iterable[T], *, workers: int = 1) -> list[R]:
    """
    map(fn, items) on a thread pool; results come back in input order.

    workers == 1 runs inline. The first exception raised by fn propagates.
    """
    seq = list(items)
    if workers <= 1 or len(seq) <= 1:
        return [fn(x) for x in seq]
    log.debug("ordered_map: %d items on %d workers", len(seq), workers)
    with ThreadPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, seq))
