import random
import sys

import pytest
from hypothesis import HealthCheck, settings

from tfg.odometer import OdometerType

settings.register_profile("tfg", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("tfg")


@pytest.fixture
def X24():
    return OdometerType((2, 4))


@pytest.fixture
def X248():
    return OdometerType((2, 4, 8))


@pytest.fixture
def X36():
    return OdometerType((3, 6))


@pytest.fixture
def rng():
    return random.Random(20181)


def pytest_terminal_summary(terminalreporter):
    # one line per acceptance criterion, collected by test_acceptance.py
    module = sys.modules.get("test_acceptance")
    RESULTS = getattr(module, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(RESULTS):
        ok, title = RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
