import math

import pytest

from wwdipole import DipoleConfig, UnitSystem
from wwdipole._backend import available


@pytest.fixture
def units():
    return UnitSystem.dimensionless()


@pytest.fixture
def cfg():
    """beta = 0.01, p0 = 0.01, omega = 1, c = 1."""
    return DipoleConfig(q=1.0, z0=0.01, omega=1.0)


@pytest.fixture(params=sorted(available()))
def kernel(request):
    return available()[request.param]


def wavelength(config, units):
    return 2 * math.pi * units.c / config.omega


_ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion: ``criterion(number, passed, detail)``."""

    def record(number, passed, detail):
        _ACCEPTANCE[number] = (bool(passed), request.node.name, detail)
        assert passed, f"criterion {number}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        passed, name, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} {number:>2} {name}: {detail}")
