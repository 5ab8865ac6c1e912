import numpy as np
import pytest

from chebkit import conf
from chebkit.dataclasses import Variant, WeightSpec
from chebkit.repulsion import verify_dh_table


@pytest.fixture
def rng():
    return np.random.default_rng(conf.DEFAULT_SEED)


@pytest.fixture(scope="session")
def dh_rows():
    return verify_dh_table(Variant.ALL_ZEROS)


@pytest.fixture
def nonexceptional_spec():
    return WeightSpec(2, 1.5, 7.41)


@pytest.fixture
def small_spec():
    return WeightSpec(2, 0.1, 2.63)


@pytest.fixture
def spec(request):
    ell, A, B = request.param
    return WeightSpec(ell, A, B)
