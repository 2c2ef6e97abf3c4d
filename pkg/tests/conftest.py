from functools import lru_cache

import pytest

from twisted_trees.enumeration import oracle_enumerate, structured_enumerate

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@lru_cache(maxsize=None)
def oracle(n):
    return tuple(oracle_enumerate(n))


@lru_cache(maxsize=None)
def structured(n):
    return tuple(structured_enumerate(n))


@pytest.fixture(scope="session")
def oracle_sets():
    return {n: oracle(n) for n in (1, 2, 3, 4)}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, desc = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {desc}")
