import math

import numpy as np
import pytest
from hypothesis import strategies as st

from jcpurity.core import BlochFourVector


@st.composite
def bloch_vectors(draw, r0=None):
    """Valid four-vectors: r0 in [0.1, 3], direction from a normal triple, radius in [0, r0]."""
    if r0 is None:
        r0 = draw(st.floats(0.1, 3.0))
    xyz = draw(st.tuples(*[st.floats(-1.0, 1.0)] * 3))
    n = math.sqrt(sum(c * c for c in xyz))
    frac = draw(st.floats(0.0, 1.0))
    if n < 1e-6:
        return BlochFourVector(r0, 0.0, 0.0, 0.0)
    return BlochFourVector(r0, *(c / n * frac * r0 for c in xyz))


def random_blochs(count, seed, r0=None):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        rr0 = rng.uniform(0.1, 3.0) if r0 is None else r0
        v = rng.normal(size=3)
        v *= rng.uniform(0.0, 1.0) * rr0 / np.linalg.norm(v)
        out.append(BlochFourVector(rr0, *v))
    return out


@pytest.fixture(scope="session")
def normalized_blochs():
    return random_blochs(1000, seed=20221004, r0=1.0)


@pytest.fixture(scope="session")
def general_blochs():
    return random_blochs(1000, seed=7)
