import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

from qosc import AlgebraParams  # noqa: E402


def q_values(lo_small=0.2, hi_small=0.95, lo_big=1.05, hi_big=4.0):
    return st.one_of(
        st.floats(lo_small, hi_small, allow_nan=False),
        st.floats(lo_big, hi_big, allow_nan=False),
    )


small_q = st.floats(0.2, 0.95, allow_nan=False)
big_q = st.floats(1.05, 4.0, allow_nan=False)
any_q = q_values()
nu0s = st.floats(-2.0, 2.0, allow_nan=False)
bs = st.floats(-3.0, 3.0, allow_nan=False)
lambda0s = st.floats(0.0, 5.0, allow_nan=False)
alphas = st.one_of(st.floats(0.1, 3.0), st.floats(-3.0, -0.1))


@pytest.fixture
def p_half():
    return AlgebraParams(0.5, 1.0)


@pytest.fixture
def p_two():
    return AlgebraParams(2.0, 1.0)
