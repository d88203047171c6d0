from itertools import product

import pytest


def all_words(max_len, sigma):
    for n in range(1, max_len + 1):
        yield from product(range(sigma), repeat=n)


def naive_borders(w):
    return [k for k in range(1, len(w)) if w[:k] == w[-k:]]


def naive_period(w):
    n = len(w)
    return next(p for p in range(1, n + 1) if all(w[i] == w[i + p] for i in range(n - p)))


@pytest.fixture(scope="session")
def exhaustive_words():
    """Binary words up to length 12 and ternary words up to length 8."""
    return list(all_words(12, 2)) + list(all_words(8, 3))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
