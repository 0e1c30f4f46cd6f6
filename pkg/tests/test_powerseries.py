import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invlogcoef.powerseries import (SeriesError, TruncatedSeries, compose, derivative,
                                    exp_series, integrate0, log_series, mul,
                                    reciprocal, revert, sqrt_series)

N = 10


def S(*c, order=N):
    return TruncatedSeries(list(c), order)


def geometric(order=N, step=1):
    c = np.zeros(order + 1)
    c[::step] = 1
    return TruncatedSeries(c)


def test_addition():
    assert (S(1, 1) + S(1, -1)).allclose(S(2))
    assert (S(0, 1, 0, 1) + S(0, 0, 1)).allclose(S(0, 1, 1, 1))
    s = S(1, 2, 3)
    assert s + 0 == s


def test_multiplication():
    assert (S(1, 1) * S(1, -1)).allclose(S(1, 0, -1))
    q = S(1, 2, 2)
    assert (q * q)[2] == 8
    assert (q * q).allclose(S(1, 4, 8, 8, 4))


def test_mul_degree_exact():
    rng = np.random.default_rng(3)
    for da in range(5):
        for db in range(5):
            a = S(*rng.normal(size=da + 1))
            b = S(*rng.normal(size=db + 1))
            want = np.convolve(a.coeffs[:da + 1], b.coeffs[:db + 1])
            got = mul(a, b).coeffs
            np.testing.assert_allclose(got[:da + db + 1], want, atol=1e-14)
            assert not np.any(got[da + db + 1:])


def test_reciprocal():
    assert reciprocal(S(1, -1)).allclose(geometric())
    assert reciprocal(S(1, 0, -1)).allclose(geometric(step=2))
    assert reciprocal(S(1)).allclose(S(1))
    with pytest.raises(SeriesError):
        reciprocal(S(0, 1))


def test_compose_examples():
    z2 = S(0, 0, 1)
    assert compose(geometric(), z2).allclose(geometric(step=2))
    assert compose(S(3, 1, 4), S(0)).allclose(S(3))
    u = TruncatedSeries.identity(N)
    q = u + sqrt_series(1 + u * u)
    want = S(1, 0, 1, 0, 0.5, 0, 0, 0, -0.125)
    assert compose(q, z2).allclose(want, 1e-15)
    with pytest.raises(SeriesError):
        compose(q, S(1, 1))


def test_exp_log_sqrt_examples():
    z = TruncatedSeries.identity(N)
    assert exp_series(S(0)).allclose(S(1))
    assert exp_series(z).allclose(S(*[1 / math.factorial(k) for k in range(N + 1)]), 1e-16)
    assert exp_series(log_series(reciprocal(1 - z))).allclose(geometric(), 1e-13)
    assert log_series(S(1)).allclose(S(0))
    L = log_series((1 + z) / (1 - z))
    assert L.allclose(S(0, 2, 0, 2 / 3, 0, 2 / 5, 0, 2 / 7, 0, 2 / 9), 1e-14)
    L = log_series(reciprocal((1 - z) ** 2))
    assert L.allclose(S(*[0] + [2 / n for n in range(1, N + 1)]), 1e-14)
    assert sqrt_series(S(1)).allclose(S(1))
    assert sqrt_series(1 + z * z).allclose(S(1, 0, 0.5, 0, -0.125, 0, 1 / 16, 0, -5 / 128, 0, 7 / 256), 1e-15)
    assert sqrt_series(1 + z ** 4).allclose(S(1, 0, 0, 0, 0.5, 0, 0, 0, -0.125), 1e-15)


def test_domain_errors():
    with pytest.raises(SeriesError):
        exp_series(S(1, 1))
    with pytest.raises(SeriesError):
        log_series(S(2, 1))
    with pytest.raises(SeriesError):
        sqrt_series(S(0, 1))
    with pytest.raises(SeriesError):
        revert(S(0, 2))
    with pytest.raises(SeriesError):
        TruncatedSeries([1, 2], 1)


def test_revert_examples():
    z = TruncatedSeries.identity(N)
    assert revert(z).allclose(z)
    koebe = S(*range(N + 1))
    g = revert(koebe)
    assert abs(g[2] + 2) < 1e-12 and abs(g[3] - 5) < 1e-12
    a2, a3 = 0.3 - 0.2j, -1.1 + 0.4j
    g = revert(S(0, 1, a2, a3))
    assert abs(g[2] + a2) < 1e-14 and abs(g[3] - (2 * a2 ** 2 - a3)) < 1e-14


def test_calculus_examples():
    assert derivative(S(0, 0, 0, 1)).allclose(S(0, 0, 3))
    assert integrate0(S(1)).allclose(S(0, 1))
    s = S(0, 0, 1, 1)
    assert integrate0(derivative(s)).allclose(s)


def test_immutability_and_order():
    s = S(1, 2, 3)
    with pytest.raises(ValueError):
        s.coeffs[0] = 5
    assert s.order == N and len(s) == N + 1
    assert s.truncate(2).order == 2


def test_evaluation_matches_polynomial():
    s = S(1, 2, 3)
    z = np.array([0.1, -0.5j, 0.3 + 0.2j])
    np.testing.assert_allclose(s(z), 1 + 2 * z + 3 * z * z)


coeff = st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False)


@settings(max_examples=60, deadline=None)
@given(st.lists(coeff, min_size=N - 1, max_size=N - 1))
def test_reversion_roundtrip(tail):
    f = TruncatedSeries([0, 1, *tail], N)
    g = revert(f)
    err = np.max(np.abs((compose(f, g) - TruncatedSeries.identity(N)).coeffs))
    # relative to the size of the reverted coefficients: representing them
    # in double precision is the error floor
    assert err <= 1e-10 * max(1.0, np.max(np.abs(g.coeffs)))


@settings(max_examples=60, deadline=None)
@given(st.lists(coeff, min_size=N, max_size=N))
def test_log_exp_sqrt_inverses(tail):
    s = TruncatedSeries([0, *tail], N)
    e = exp_series(s)
    assert log_series(e).allclose(s, 1e-12 * max(1.0, np.max(np.abs(e.coeffs))))
    u = 1 + s
    r = sqrt_series(u)
    assert (r * r).allclose(u, 1e-12 * max(1.0, np.max(np.abs(r.coeffs))) ** 2)
