import pytest

from cantormeasure.corpus import CORPUS

ACCEPTANCE_LINES = []


@pytest.fixture(params=sorted(CORPUS))
def corpus_spec(request):
    return CORPUS[request.param]


@pytest.fixture
def record_criterion():
    def record(number, ok, detail):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
