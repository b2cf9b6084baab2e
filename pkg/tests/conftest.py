import random
import sys

import pytest

from fmcurve.moduli import mu0
from fmcurve.omega import FIXTURE


@pytest.fixture(scope="session")
def m0():
    return mu0()


@pytest.fixture
def fixture_mu():
    return FIXTURE


@pytest.fixture
def rng():
    return random.Random(20261017)



def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        status, text = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {text}")
