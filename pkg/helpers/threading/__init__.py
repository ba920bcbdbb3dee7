# helpers/threading/__init__.py
# Public exports for helpers.threading (worker pools for sweeps and suites).

"""
helpers.threading

Scope:
- worker-count resolution (explicit, env var, cpu count)
- order-preserving parallel map

Non-goals:
- async runtimes, shared mutable state between tasks
"""

from .pool import THREADS_ENV, ordered_map, worker_count

__all__ = ["THREADS_ENV", "ordered_map", "worker_count"]
