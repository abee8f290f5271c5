from functools import lru_cache

import pytest
from hypothesis import strategies as st

from sytrecon import Tableau, count_syt, enumerate_syt

BIG_ROWS = [[1, 2, 3, 4, 5], [6, 7, 8, 9, 18], [10, 11, 12, 17], [13, 16], [14], [15]]
BIG_MINUS_8_ROWS = [[1, 2, 3, 4, 5], [6, 7, 8, 16, 17], [9, 10, 11], [12, 15], [13], [14]]
SIZE7_TWIN_PAIR = ("1 2 5 7/3 4 6", "1 3 5 7/2 4 6")


@lru_cache(maxsize=None)
def all_syt(n):
    return tuple(enumerate_syt(n))


def syt_strategy(min_n=1, max_n=8):
    """Uniform choice of n, then a uniform tableau of that size."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.integers(0, count_syt(n) - 1).map(lambda i: all_syt(n)[i]))


@pytest.fixture
def big_tableau():
    return Tableau(BIG_ROWS)


@pytest.fixture
def big_minus_8():
    return Tableau(BIG_MINUS_8_ROWS)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
