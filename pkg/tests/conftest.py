import pytest

import helpers


@pytest.fixture
def sample():
    return helpers.sample()


@pytest.fixture(scope="session")
def small_corpus():
    return helpers.corpus()


def pytest_terminal_summary(terminalreporter):
    if not helpers.ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(helpers.ACCEPTANCE):
        ok, detail = helpers.ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
