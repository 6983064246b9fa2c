import numpy as np
import pytest
from hypothesis import strategies as st

from janowski_schwarzian import classify, validate


@st.composite
def janowski_params(draw, region=None):
    B = draw(st.floats(-1.0, 0.999, allow_nan=False))
    frac = draw(st.floats(0.001, 1.0, allow_nan=False))
    A = B + (1.0 - B) * frac
    p = validate(min(A, 1.0), B)
    if region is not None:
        from hypothesis import assume
        assume(classify(p).value == region)
    return p


def sample_params(region, n, seed):
    """Rejection-sample ``n`` valid pairs from the given region."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        B = rng.uniform(-1.0, 1.0)
        A = rng.uniform(B, 1.0)
        if A <= B:
            continue
        p = validate(A, B)
        if classify(p).value == region:
            out.append(p)
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
