import time

import pytest

_LINES = []


class Criterion:
    """Times one acceptance criterion and records a PASS/FAIL line."""

    def __init__(self, number, title, bound_s):
        self.number, self.title, self.bound_s = number, title, bound_s

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def finish(self, ok, detail):
        elapsed = time.perf_counter() - self.start
        in_time = self.bound_s is None or elapsed < self.bound_s
        bound = f" (bound {self.bound_s:g} s)" if self.bound_s is not None else ""
        verdict = "PASS" if ok and in_time else "FAIL"
        line = f"criterion {self.number} {verdict}: {self.title}; {detail}; {elapsed:.2f} s{bound}"
        _LINES.append(line)
        print(line)
        return ok and in_time

    def __exit__(self, *exc):
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
