import random

import pytest

from gaplab.properties import random_graph


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def random_graphs():
    """10^4 seeded random graphs with 1..12 vertices and mixed densities."""
    r = random.Random(2024)
    return [random_graph(r) for _ in range(10_000)]


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> bool:
        ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
        print(ACCEPTANCE_LINES[-1])
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
