import random

import pytest

from syzygy import fixtures


@pytest.fixture(scope="session")
def doc():
    return fixtures.document()


@pytest.fixture(scope="session")
def R1(doc):
    return doc.ring("R1")


@pytest.fixture(scope="session")
def R2(doc):
    return doc.ring("R2")


@pytest.fixture(scope="session")
def R3(doc):
    return doc.ring("R3")


@pytest.fixture(scope="session")
def R4(doc):
    return doc.ring("R4")


@pytest.fixture(scope="session")
def R5(doc):
    return doc.ring("R5")


@pytest.fixture
def rng():
    return random.Random(20240607)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = next((m for name, m in list(sys.modules.items()) if name.split(".")[-1] == "test_acceptance"), None)
    LINES = getattr(mod, "LINES", None)
    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
