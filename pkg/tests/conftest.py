import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=50, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

import time

import pytest

_LINES = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Run one acceptance criterion: time it, log a PASS/FAIL line, then assert."""
    lines = request.config.stash.setdefault(_LINES, [])

    def run(n, title, fn, limit=None):
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as e:
            ok, detail = False, f"{type(e).__name__}: {e}"
        dt = time.perf_counter() - t0
        if limit is not None and dt >= limit:
            ok, detail = False, f"{detail}; took {dt:.1f}s, limit {limit}s"
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {n} ({title}): {detail} [{dt:.2f}s]"
        lines.append((n, line))
        print(line)
        assert ok, line

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
