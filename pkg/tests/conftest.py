import pytest

from cherednik.gf import ctx_create


@pytest.fixture(scope="session")
def F9():
    return ctx_create(3, 2)


@pytest.fixture(scope="session")
def F49():
    return ctx_create(7, 2)


@pytest.fixture(scope="session")
def F81():
    return ctx_create(3, 4)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
