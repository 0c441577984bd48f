from __future__ import annotations

import sys
from functools import lru_cache
from pathlib import Path

import pytest
from hypothesis import settings

from flewb.boolean import make_balgebra
from flewb.enumerate import enumerate_algebras
from flewb.fixtures import fixtures

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def algebras_upto(n: int):
    return tuple(enumerate_algebras(n))


@lru_cache(maxsize=None)
def balgebras_upto(n: int):
    return tuple(make_balgebra(A) for A in algebras_upto(n))


@lru_cache(maxsize=None)
def fixture_balgebras():
    return tuple(make_balgebra(A) for A in fixtures().values())


def small_and_fixtures(n: int = 5):
    """Every enumerated algebra up to size n plus every named fixture."""
    return balgebras_upto(n) + fixture_balgebras()


@pytest.fixture(scope="session")
def upto5():
    return balgebras_upto(5)


@pytest.fixture(scope="session")
def upto4():
    return balgebras_upto(4)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in range(1, 12):
        title, ok = module.RESULTS.get(number, ("not run", None))
        status = "NOT RUN" if ok is None else ("PASS" if ok else "FAIL")
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}")
