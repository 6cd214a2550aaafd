import pytest

from gaindex import enumerate_unicyclic

_CRITERIA = []


@pytest.fixture(scope="session")
def unicyclic():
    """Memoized access to the enumerated graphs of one order."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = tuple(enumerate_unicyclic(n))
        return cache[n]

    return get


@pytest.fixture
def criteria_log():
    return _CRITERIA


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok in sorted(_CRITERIA):
        terminalreporter.write_line(f"[criterion {num}] {'PASS' if ok else 'FAIL'}: {desc}")
