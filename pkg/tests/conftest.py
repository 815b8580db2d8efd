import time

import pytest

_ACCEPTANCE: list[str] = []


class Criterion:
    """Times one acceptance criterion and records a pass/fail line."""

    def __init__(self, number: int, title: str, budget: float | None):
        self.number, self.title, self.budget = number, title, budget

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        over = self.budget is not None and elapsed >= self.budget
        ok = exc_type is None and not over
        budget = f" < {self.budget:g} s" if self.budget is not None else ""
        note = " (over budget)" if over and exc_type is None else ""
        _ACCEPTANCE.append(f"{'PASS' if ok else 'FAIL'}  [{self.number:2d}] {self.title}  "
                           f"{elapsed:.2f} s{budget}{note}")
        if over and exc_type is None:
            raise AssertionError(f"criterion {self.number} took {elapsed:.2f} s, budget {self.budget} s")
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
