import time
from contextlib import contextmanager

import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion(request):
    """Context manager that times one acceptance criterion and records a PASS/FAIL line."""
    lines = request.config.stash[_LINES]

    @contextmanager
    def run(number: int, title: str, limit: float | None = None):
        info = {"detail": ""}
        start = time.perf_counter()
        try:
            yield info
        except BaseException as exc:
            msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
            line = f"FAIL criterion {number} ({title}): {msg}"
            lines.append(line)
            print(line)
            raise
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            line = f"FAIL criterion {number} ({title}): {elapsed:.2f}s exceeds the {limit:g}s limit"
            lines.append(line)
            print(line)
            pytest.fail(line)
        line = f"PASS criterion {number} ({title}): {info['detail']} [{elapsed:.2f}s]"
        lines.append(line)
        print(line)

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
