import numpy as np
import pytest

from atrig import preset


@pytest.fixture
def h2():
    return preset("hyperbolic", 2)


@pytest.fixture
def h3():
    return preset("hyperbolic", 3)


@pytest.fixture
def c2():
    return preset("complicated", 2)


@pytest.fixture
def gamma2():
    return preset("nil", 2)


@pytest.fixture
def rng():
    return np.random.default_rng(0)
