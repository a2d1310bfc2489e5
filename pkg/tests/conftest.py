import numpy as np
import pytest

from milnezeta import scan_zeros


@pytest.fixture(scope="session")
def scan100():
    """One shared desk-scale scan up to T = 100."""
    return scan_zeros(100.0, 0.01)


@pytest.fixture(scope="session")
def scan160():
    """Wider scan for empirical-density statistics."""
    return scan_zeros(160.0, 0.01)


@pytest.fixture()
def rng():
    return np.random.default_rng(20260810)
