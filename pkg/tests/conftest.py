import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from models.potential import PotentialSpec  # noqa: E402


def make_spec(family, domain, **params):
    return PotentialSpec(family=family, params=params, domain=domain)


@pytest.fixture
def harmonic_well():
    return make_spec("harmonic_well", (-4.0, 4.0), k=1.0, center=0.0)


@pytest.fixture
def parabolic_barrier():
    return make_spec("parabolic_barrier", (-4.0, 4.0), V0=1.0, k=1.0, center=0.0)


@pytest.fixture
def square_barrier():
    return make_spec("square_barrier", (-6.0, 6.0), V0=1.0, width=2.0, center=0.0)


@pytest.fixture
def square_well():
    return make_spec("square_well", (-3.0, 3.0), V0=1.0, width=2.0, center=0.0)


@pytest.fixture
def gaussian_barrier():
    return make_spec("gaussian_barrier", (-16.0, 16.0), V0=1.0, sigma=2.0, center=0.0)


@pytest.fixture
def free_space():
    return make_spec("constant", (-10.0, 10.0), V0=0.0)


@pytest.fixture
def flat_top():
    return PotentialSpec(
        family="piecewise_linear",
        params={"xs": [-4.0, -1.0, 1.0, 4.0], "vs": [0.0, 1.0, 1.0, 0.0]},
        domain=(-4.0, 4.0),
    )
