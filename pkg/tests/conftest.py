import pytest

from cd_spinsim import DotParams


@pytest.fixture(scope="session")
def params():
    """Calibrated defaults: 11 ns adiabatic schedule."""
    return DotParams()


@pytest.fixture(scope="session")
def params_fast(params):
    """Same drive compressed to the 2 ns shortcut schedule."""
    return params.with_t_f(2.0)
