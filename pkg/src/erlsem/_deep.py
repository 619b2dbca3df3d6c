"""Run deeply recursive evaluators on a thread with a large C stack.

The engines recurse once (or a few times) per unit of fuel, so a fuel of a
few thousand already exceeds CPython's default limits.  Entry points are
wrapped with :func:`deep`; nested calls on the worker thread run directly.
"""

from __future__ import annotations

import functools
import sys
import threading

STACK_SIZE = 512 * 1024 * 1024
RECURSION_LIMIT = 250_000

_local = threading.local()


def run_deep(fn, *args, **kwargs):
    if getattr(_local, "active", False):
        return fn(*args, **kwargs)
    box = {}

    def target():
        _local.active = True
        try:
            box["value"] = fn(*args, **kwargs)
        except BaseException as err:  # re-raised on the calling thread
            box["error"] = err

    if sys.getrecursionlimit() < RECURSION_LIMIT:
        sys.setrecursionlimit(RECURSION_LIMIT)
    old = threading.stack_size(STACK_SIZE)
    try:
        worker = threading.Thread(target=target, name="erlsem-deep")
        worker.start()
    finally:
        threading.stack_size(old)
    worker.join()
    if "error" in box:
        raise box["error"]
    return box["value"]


def deep(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        return run_deep(fn, *args, **kwargs)
    return wrapper
