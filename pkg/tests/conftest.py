import os
import sys

import pytest
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from bmwfusion import build_context, make_params  # noqa: E402

Q = Fraction(6, 5)
NU = Fraction(7, 3)

_ACCEPTANCE_LINES = []


def record_acceptance(line):
    _ACCEPTANCE_LINES.append(line)


@pytest.fixture(scope="session")
def params4():
    return make_params(Q, NU, 4)


@pytest.fixture(scope="session")
def ctx2():
    return build_context(2, q=Q, nu=NU)


@pytest.fixture(scope="session")
def ctx3():
    return build_context(3, q=Q, nu=NU)


@pytest.fixture(scope="session")
def ctx4():
    return build_context(4, q=Q, nu=NU)


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "stretch: opt-in long-running suite (BMWF_STRETCH=1)")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("BMWF_STRETCH"):
        return
    skip = pytest.mark.skip(reason="stretch suite: set BMWF_STRETCH=1")
    for item in items:
        if "stretch" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
