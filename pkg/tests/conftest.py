import numpy as np
import pytest
from hypothesis import settings, strategies as st

from slicereg import quaternion as Q

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

finite = st.floats(-3, 3, allow_nan=False, allow_infinity=False)
quaternions = st.lists(finite, min_size=4, max_size=4).map(np.array)
seeds = st.integers(0, 2**32 - 1)


@st.composite
def unit_quaternions(draw):
    v = draw(st.lists(st.floats(-1, 1), min_size=4, max_size=4).filter(lambda x: np.linalg.norm(x) > 0.1))
    v = np.array(v)
    return v / np.linalg.norm(v)


@st.composite
def frames(draw):
    return Q.rotate_frame(draw(unit_quaternions()), Q.STANDARD_FRAME)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
