import itertools

import pytest

from foldloop.braid import BraidWord

_ACCEPTANCE_LINES: list[str] = []


def all_words(m_max, n_max, m_min=1):
    """Every braid word with m_min <= m <= m_max strands and at most n_max letters."""
    for m in range(m_min, m_max + 1):
        alphabet = [k for i in range(1, m) for k in (i, -i)]
        for n in range(n_max + 1):
            for ints in itertools.product(alphabet, repeat=n):
                yield BraidWord.from_ints(m, ints)


@pytest.fixture(scope="session")
def corpus():
    """The enumerated corpus used by most invariants: m <= 4, n <= 6."""
    return list(all_words(4, 6))


@pytest.fixture(scope="session")
def small_corpus():
    return list(all_words(4, 4))


@pytest.fixture
def acceptance_line():
    def record(number, ok, detail):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
