import pytest

from fockyangian import mutations

_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture(autouse=True)
def no_mutations():
    """Every test starts and ends with no seeded fault active."""
    assert not mutations.ACTIVE
    yield
    assert not mutations.ACTIVE


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines):
        terminalreporter.write_line(line[1])
