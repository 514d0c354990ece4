import os

from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

import time
from contextlib import contextmanager

import pytest

_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line: ``with criterion(3, "maps", budget=600): ...``."""

    @contextmanager
    def run(number, title, budget=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            over = budget is not None and elapsed > budget
            status = "PASS" if ok and not over else "FAIL"
            note = f" (over the {budget}s budget)" if ok and over else ""
            line = f"[{status}] criterion {number:2d}: {title} [{elapsed:.1f}s]{note}"
            _ACCEPTANCE.append(line)
            print(line)
        assert not over, f"criterion {number} took {elapsed:.1f}s, budget {budget}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
