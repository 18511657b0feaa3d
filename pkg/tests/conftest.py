import random

import pytest

from k3colorings import kernels
from k3colorings.graph import Graph

BACKENDS = sorted(kernels.BACKENDS)


@pytest.fixture(params=BACKENDS)
def backend(request):
    with kernels.backend(request.param):
        yield request.param


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


# acceptance criteria report one line each at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
