import math

import numpy as np
import pytest

from invlogcoef.caratheodory import body_coeffs, p_from_schwarz, rational_p
from invlogcoef.classes import (F4_A, ClassId, coeffs_from_p, extremal,
                                lower_extremal_parameter, lune_membership,
                                p_from_series, series_from_p)
from invlogcoef.harness.render import evaluate_extremal
from invlogcoef.powerseries import TruncatedSeries

N = 12


def test_parse():
    assert ClassId.parse("starlike-lune") is ClassId.STARLIKE_LUNE
    assert ClassId.parse("ConvexSymmetric") is ClassId.CONVEX_SYMMETRIC
    with pytest.raises(ValueError):
        ClassId.parse("Spirallike")


def test_coeffs_from_p_examples():
    assert coeffs_from_p(ClassId.STARLIKE_SYMMETRIC, 2, 2) == (1, 1)
    assert coeffs_from_p(ClassId.STARLIKE_LUNE, 0, 2) == (0, 0.5)
    assert coeffs_from_p(ClassId.CONVEX_LUNE, 0, 0) == (0, 0)


def test_series_from_p_examples():
    f1 = series_from_p(ClassId.STARLIKE_SYMMETRIC, rational_p(0.0, N))
    odd = np.where(np.arange(N + 1) % 2 == 1, 1.0, 0.0)
    assert f1.allclose(TruncatedSeries(odd), 1e-14)
    f2 = series_from_p(ClassId.CONVEX_SYMMETRIC, rational_p(0.0, N))
    want = [1 / n if n % 2 else 0 for n in range(N + 1)]
    assert f2.allclose(TruncatedSeries(want), 1e-14)
    f5 = series_from_p(ClassId.CONVEX_LUNE, rational_p(0.0, N))
    assert abs(f5[3] - 1 / 6) < 1e-15 and abs(f5[5] - 1 / 20) < 1e-15


def test_p1_generates_z_over_one_minus_z():
    # (1+z)/(1-z) as the symmetric-point quotient gives z/(1-z), not z/(1-z^2)
    f = series_from_p(ClassId.STARLIKE_SYMMETRIC, rational_p(1.0, N))
    assert f.allclose(TruncatedSeries([0] + [1] * N), 1e-13)


def test_extremal_coefficients():
    f1 = extremal("f1")
    assert abs(f1[2]) < 1e-15 and abs(f1[3] - 1) < 1e-15
    f3 = extremal("f3")
    assert abs(f3[2]) < 1e-15 and abs(f3[3] - 0.5) < 1e-15
    f4 = extremal("f4")
    assert abs(f4[2] - F4_A) < 1e-15 and abs(f4[3] - 0.6) < 1e-15


def test_f6_parameter_is_six_sevenths():
    assert abs(lower_extremal_parameter(ClassId.CONVEX_LUNE) - 6 / 7) < 1e-6


def test_series_matches_coeffs_from_p():
    rng = np.random.default_rng(2)
    for cls in ClassId:
        for _ in range(25):
            z1 = np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
            z2 = np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
            w = TruncatedSeries([0, z1, (1 - abs(z1) ** 2) * z2], N)
            p = p_from_schwarz(w)
            f = series_from_p(cls, p)
            a2, a3 = coeffs_from_p(cls, *body_coeffs(z1, z2))
            assert abs(f[2] - a2) < 1e-10 and abs(f[3] - a3) < 1e-10


def test_p_from_series_inverts():
    rng = np.random.default_rng(4)
    for cls in ClassId:
        w = TruncatedSeries([0, *(0.4 * rng.normal(size=N) + 0.2j * rng.normal(size=N))], N)
        p = p_from_schwarz(w)
        back = p_from_series(cls, series_from_p(cls, p))
        assert back.allclose(p.truncate(N - 1), 1e-9)


def test_symmetric_classes_give_odd_f_for_even_p():
    rng = np.random.default_rng(5)
    c = np.zeros(N + 1, dtype=complex)
    c[2::2] = rng.normal(size=N // 2) + 1j * rng.normal(size=N // 2)
    w = TruncatedSeries(c)
    p = p_from_schwarz(w * 0.3)
    for cls in (ClassId.STARLIKE_SYMMETRIC, ClassId.CONVEX_SYMMETRIC):
        f = series_from_p(cls, p)
        assert np.all(np.abs(f.coeffs[::2]) < 1e-14)


def test_starlike_symmetric_matches_closed_form_of_f1():
    z = np.array([0.3, 0.2 + 0.1j, -0.25j])
    f = extremal("f1", 60)
    np.testing.assert_allclose(f(z), z / (1 - z * z), atol=1e-14)


def test_lune_membership():
    ok, _ = lune_membership(extremal("f3", 40), radius=0.9, samples=360)
    assert ok
    ok, _ = lune_membership(extremal("f3", 60), radius=0.99, tol=1e-6)
    assert ok
    ok, _ = lune_membership(extremal("f5", 60), radius=0.99, tol=1e-6, convex=True)
    assert ok
    ok, slack = lune_membership(TruncatedSeries([0, 1], N))
    assert ok and slack == 2
    # the truncation at low order hides the violation; at high order it shows
    koebe = TruncatedSeries([0] + list(range(1, 1501)), 1500)
    ok, slack = lune_membership(koebe, radius=0.99)
    assert not ok and slack < -1


def test_f3_series_against_cauchy_coefficients():
    # coefficients of the closed form via a discrete Cauchy integral on |z| = 0.5
    m, r = 256, 0.5
    z = r * np.exp(2j * np.pi * np.arange(m) / m)
    vals = evaluate_extremal("f3", z, method="closed")
    a = np.fft.fft(vals) / m / r ** np.arange(m)
    f = extremal("f3", 20)
    np.testing.assert_allclose(f.coeffs[:16], a[:16], atol=1e-10)
    assert math.isclose(f[3].real, 0.5)
