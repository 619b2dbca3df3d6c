"""Collects one pass/fail line per acceptance criterion."""

import time
from contextlib import contextmanager

LINES: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str):
    notes: list[str] = []
    start = time.perf_counter()
    ok = False
    try:
        yield notes
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        detail = "; ".join(notes)
        status = "PASS" if ok else "FAIL"
        line = f"criterion {number:>2} {status}  {title} [{elapsed:.2f}s]"
        LINES[number] = f"{line}  {detail}" if detail else line
        print(LINES[number])
