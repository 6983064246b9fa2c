import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from janowski_schwarzian import PowerSeries

coeffs = st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False),
                  min_size=1, max_size=12)


def test_exp_log_integ_deriv():
    z = PowerSeries.variable(10)
    e = z.exp()
    assert np.allclose(e.c, [1 / math.factorial(n) for n in range(11)], atol=1e-16)
    assert np.allclose(e.log().c, z.c, atol=1e-15)
    assert np.allclose((1 - z).reciprocal().c, np.ones(11))
    assert np.allclose(e.deriv().c, e.c[:10])
    assert e.integ().order == 11
    assert np.allclose(e.integ().c[1:], e.c / np.arange(1, 12))


@given(coeffs, coeffs)
@settings(max_examples=100)
def test_truncation_commutes_with_multiplication(a, b):
    x, y = PowerSeries(a), PowerSeries(b)
    n = min(x.order, y.order)
    full = np.convolve(np.asarray(a, complex), np.asarray(b, complex))[: n + 1]
    assert np.allclose((x * y).c, full)
    assert np.allclose((x.truncate(n) * y.truncate(n)).c, full)


@given(coeffs)
@settings(max_examples=100)
def test_reciprocal(a):
    x = PowerSeries(a)
    if abs(x.c[0]) < 0.1:
        x = x + 1.0
    one = x * x.reciprocal()
    expected = np.zeros(len(x.c))
    expected[0] = 1
    scale = max(1.0, np.max(np.abs(x.reciprocal().c)) * np.max(np.abs(x.c)))
    assert np.allclose(one.c, expected, atol=1e-9 * scale)


def test_scalar_ops():
    x = PowerSeries([1, 2, 3])
    assert np.allclose((2 * x - 1).c, [1, 4, 6])
    assert np.allclose((x / 2).c, [0.5, 1, 1.5])
    assert np.allclose((1 / PowerSeries([2, 0, 0])).c, [0.5, 0, 0])
