from pathlib import Path

import pytest

from taxsim import build_ic, load_frequencies, load_taxonomy

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def univ():
    return load_taxonomy(FIXTURES / "univ.tax")


@pytest.fixture(scope="session")
def star():
    return load_taxonomy(FIXTURES / "star.tax")


@pytest.fixture(scope="session")
def pedagogic():
    return load_taxonomy(FIXTURES / "pedagogic.tax")


@pytest.fixture(scope="session")
def tiny():
    return load_taxonomy(FIXTURES / "tiny_ic.tax")


@pytest.fixture(scope="session")
def tiny_ic(tiny):
    return build_ic(load_frequencies(FIXTURES / "tiny_ic.freq", tiny), tiny)


_ACCEPTANCE = {}


def record(n, ok, detail):
    _ACCEPTANCE[n] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[n]
        terminalreporter.write_line(f"AC{n:<2} {'PASS' if ok else 'FAIL'}  {detail}")
