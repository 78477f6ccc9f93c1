import math

import pytest
from hypothesis import HealthCheck, settings

from bogorad.condensate import CondensateParams

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def natural():
    return CondensateParams.natural(density=1.0, coupling=1.0)


def rel(a, b):
    return abs(a - b) / abs(b)


HALF_PI = math.pi / 2


_ACCEPTANCE_LINES = []


@pytest.fixture
def record():
    """Log one PASS/FAIL line for the acceptance summary and return the verdict."""

    def _record(label, passed, detail):
        _ACCEPTANCE_LINES.append(f"{'PASS' if passed else 'FAIL'} criterion {label}: {detail}")
        return passed

    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
