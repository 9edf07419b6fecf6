import pytest

import acceptance_log
from oracles import CountingKernel


@pytest.fixture
def counting():
    """Factory that records the kernel it hands out."""
    made = []

    def factory(ds):
        k = CountingKernel(ds)
        made.append(k)
        return k

    factory.made = made
    return factory


def pytest_terminal_summary(terminalreporter):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
