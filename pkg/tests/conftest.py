import random

import pytest

from josephus3.oracles import euler_values, iter_euler

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def euler_table():
    """J3(n) for n = 0..10**6 from the linear recurrence; index 0 unused."""
    table = [0]
    table.extend(j for _, j in iter_euler(10**6))
    return table


@pytest.fixture(scope="session")
def random_large_n():
    """1000 random n <= 10**8 with their oracle values, from one linear pass."""
    rng = random.Random(20240501)
    ns = [rng.randint(1, 10**8) for _ in range(1000)]
    return euler_values(ns)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
