import pytest
from hypothesis import HealthCheck, settings

from multalg import kernels

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    """Run a test once per available kernel backend."""
    previous = kernels.BACKEND
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)


# ----------------------------------------------------------------------------
# acceptance criteria: one PASS/FAIL line each, printed in the terminal summary

import contextlib
import time

ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """``with criterion(n, title, limit=seconds):`` records a pass/fail line for criterion n."""
    results = request.config.stash.setdefault(ACCEPTANCE, {})

    @contextlib.contextmanager
    def record(number: int, title: str, limit: float | None = None):
        start = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - start
            if limit is not None and elapsed >= limit:
                raise AssertionError(f"took {elapsed:.2f}s, limit {limit}s")
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            results[number] = f"criterion {number}: FAIL  {title} ({elapsed:.2f}s): {exc}"
            print(results[number])
            raise
        results[number] = f"criterion {number}: PASS  {title} ({elapsed:.2f}s)"
        print(results[number])

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE, None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
