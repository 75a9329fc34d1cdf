import numpy as np
import pytest

from qha.phasegrid import hermite, make_grid


@pytest.fixture(scope="session")
def grid128():
    return make_grid(128)


@pytest.fixture(scope="session")
def hermites(grid128):
    return [hermite(n, grid128) for n in range(10)]


@pytest.fixture()
def rng():
    return np.random.default_rng(20240811)
