"""The four function classes, their coefficient maps and extremal functions.

Each class is defined by a relation ``Q_f(z) = p(z)`` or ``Q_f(z) = q(w(z))``
with ``p`` Carathéodory, ``w = (p - 1)/(p + 1)`` and ``q(u) = u + sqrt(1 + u^2)``:

==================  =========================================
StarlikeSymmetric   ``2 z f' / (f(z) - f(-z)) = p``
ConvexSymmetric     ``2 (z f')' / (f(z) - f(-z))' = p``
StarlikeLune        ``z f' / f = q(w)``
ConvexLune          ``1 + z f'' / f' = q(w)``
==================  =========================================
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .caratheodory import p_from_schwarz, rational_p, schwarz_from_p
from .powerseries import (DEFAULT_ORDER, SeriesError, TruncatedSeries,
                          derivative, exp_series, integrate0, reciprocal,
                          sqrt_series)
from .psi import PsiCoeffs, oracle_max


class ClassId(Enum):
    # tag, Psi prefactor, (B1, B2, B3), starlike or convex, lune or symmetric
    STARLIKE_SYMMETRIC = ("StarlikeSymmetric", Fraction(1, 16), (4, 3, -4))
    CONVEX_SYMMETRIC = ("ConvexSymmetric", Fraction(1, 192), (24, 9, -16))
    STARLIKE_LUNE = ("StarlikeLune", Fraction(1, 32), (8, 5, -4))
    CONVEX_LUNE = ("ConvexLune", Fraction(1, 192), (24, 7, -8))

    @property
    def tag(self) -> str:
        return self.value[0]

    @property
    def scale(self) -> Fraction:
        return self.value[1]

    @property
    def B(self) -> PsiCoeffs:
        b1, b2, b3 = self.value[2]
        return PsiCoeffs(float(b1), complex(b2), float(b3))

    @property
    def convex(self) -> bool:
        return self in (ClassId.CONVEX_SYMMETRIC, ClassId.CONVEX_LUNE)

    @property
    def lune(self) -> bool:
        return self in (ClassId.STARLIKE_LUNE, ClassId.CONVEX_LUNE)

    @classmethod
    def parse(cls, name: str) -> "ClassId":
        key = name.replace("-", "").replace("_", "").lower()
        for c in cls:
            if c.tag.lower() == key:
                return c
        raise ValueError(f"unknown class {name!r}; "
                         f"choose from {[c.tag for c in cls]}")


def coeffs_from_p(cls: ClassId, c1, c2):
    """``(a2, a3)`` of the class member generated by ``p = 1 + c1 z + c2 z^2 + ...``.

    Works elementwise on arrays.
    """
    if cls is ClassId.STARLIKE_SYMMETRIC:
        return c1 / 2, c2 / 2
    if cls is ClassId.CONVEX_SYMMETRIC:
        return c1 / 4, c2 / 6
    if cls is ClassId.STARLIKE_LUNE:
        return c1 / 2, c1 ** 2 / 16 + c2 / 4
    return c1 / 4, c1 ** 2 / 48 + c2 / 12


def lune_q(w: TruncatedSeries) -> TruncatedSeries:
    """``w + sqrt(1 + w^2)`` as a series."""
    return w + sqrt_series(1.0 + w * w)


def _symmetric_series(p: np.ndarray, convex: bool) -> np.ndarray:
    # z f' = p * g with g the odd part of f (starlike), or
    # (z f')' = p * h with h = derivative of the odd part (convex);
    # match z^n (resp. z^(n-1)) and solve for a_n.
    n_top = len(p) - 1
    a = np.zeros(n_top + 1, dtype=complex)
    a[1] = 1.0
    for n in range(2, n_top + 1):
        acc = 0j
        for j in range(1, n):
            k = n - j
            if k % 2 == 1:
                acc += p[j] * (k * a[k] if convex else a[k])
        lead = n * n if convex else n
        if n % 2 == 1:
            lead -= n if convex else 1
        a[n] = acc / lead
    return a


def series_from_p(cls: ClassId, p: TruncatedSeries) -> TruncatedSeries:
    """The normalized ``f`` of class ``cls`` generated by ``p``, to ``p.order``."""
    if abs(p[0] - 1.0) > 1e-12:
        raise SeriesError(f"p must have constant term 1, got {p[0]}")
    if p.order < 3:
        raise SeriesError("series_from_p needs order >= 3")
    if not cls.lune:
        return TruncatedSeries(_symmetric_series(p.coeffs, cls.convex))
    h = lune_q(schwarz_from_p(p))
    # (h - 1)/z is exact through degree N-1, all that integrate0 reads
    log_deriv = integrate0((h - 1.0).shift_down())
    e = exp_series(log_deriv)
    if cls is ClassId.STARLIKE_LUNE:
        return e.shift_up()
    return integrate0(e)


def p_from_series(cls: ClassId, f: TruncatedSeries) -> TruncatedSeries:
    """Recover ``p`` from a class member ``f``; the result has order ``N - 1``."""
    n = f.order - 1
    if not cls.lune:
        odd = TruncatedSeries(np.where(np.arange(f.order + 1) % 2 == 1, f.coeffs, 0))
        if cls.convex:
            num = 2.0 * derivative(derivative(f).shift_up())
            den = 2.0 * derivative(odd)
        else:
            num = 2.0 * derivative(f)
            den = 2.0 * odd.shift_down()
        return (num.truncate(n) * reciprocal(den.truncate(n)))
    v = quotient_series(f, convex=cls.convex).truncate(n)
    w = (v * v - 1.0) * reciprocal(2.0 * v)
    w = TruncatedSeries(np.concatenate([[0], w.coeffs[1:]]))
    return p_from_schwarz(w)


def quotient_series(f: TruncatedSeries, convex: bool = False) -> TruncatedSeries:
    """``z f'/f`` (starlike) or ``1 + z f''/f'`` (convex), exact to order ``N - 1``.

    The returned series keeps order ``N`` with a zero top coefficient.
    """
    fp = derivative(f)
    if convex:
        return 1.0 + derivative(fp).shift_up() * reciprocal(fp)
    return fp * reciprocal(f.shift_down())


EXTREMAL_NAMES = ("f1", "f2", "f3", "f4", "f5", "f6")
PRINTED_F6_A = 4 / 7
F4_A = 2 / math.sqrt(10)


@lru_cache(maxsize=None)
def lower_extremal_parameter(cls: ClassId) -> float:
    """``A`` in ``rational_p(A)`` at which the oracle minimizes the moduli difference.

    Read off from the maximizer of ``Psi-``: for the lune classes it sits on
    ``c2 = 2`` (``rho = 1, phi = 0``), where ``c1 = 2 x`` gives ``A = x``.
    """
    res = oracle_max(cls.B, "minus")
    return res.x


def extremal_class(name: str) -> ClassId:
    return {
        "f1": ClassId.STARLIKE_SYMMETRIC, "f2": ClassId.CONVEX_SYMMETRIC,
        "f3": ClassId.STARLIKE_LUNE, "f4": ClassId.STARLIKE_LUNE,
        "f5": ClassId.CONVEX_LUNE, "f6": ClassId.CONVEX_LUNE,
    }[name]


def extremal_p(name: str, order: int = DEFAULT_ORDER, A: float | None = None):
    if name in ("f1", "f2", "f3", "f5"):
        # f1 is odd, so its symmetric-point quotient is z f1'/f1 = (1+z^2)/(1-z^2)
        return rational_p(0.0, order)
    if name == "f4":
        return rational_p(F4_A if A is None else A, order)
    if name == "f6":
        if A is None:
            A = lower_extremal_parameter(ClassId.CONVEX_LUNE)
        return rational_p(A, order)
    raise ValueError(f"unknown extremal function {name!r}")


def extremal(name: str, order: int = DEFAULT_ORDER, A: float | None = None) -> TruncatedSeries:
    """Series of the extremal function ``name`` (``f1`` ... ``f6``).

    ``A`` overrides the parameter of ``f4`` / ``f6``; by default ``f4`` uses
    ``2/sqrt(10)`` and ``f6`` the oracle minimizer (see
    :func:`lower_extremal_parameter`).
    """
    if name not in EXTREMAL_NAMES:
        raise ValueError(f"unknown extremal function {name!r}")
    return series_from_p(extremal_class(name), extremal_p(name, order, A))


def lune_membership(f: TruncatedSeries, radius: float = 0.99, samples: int = 720,
                    tol: float = 1e-9, convex: bool = False):
    """Sample the lune condition ``|v^2 - 1| <= 2|v|`` on ``|z| = radius``.

    ``v`` is ``z f'/f`` (or ``1 + z f''/f'`` when ``convex``), built as a
    series and summed at the sample points.  A truncation allowance
    ``|v_{N-1}| radius^(N-1) (N-1)`` is added to ``tol``.  This is a necessary
    condition check, not a proof.

    Returns ``(ok, worst_slack)`` with slack ``2|v| - |v^2 - 1|``.
    """
    if not 0 < radius < 1:
        raise ValueError("radius must lie in (0, 1)")
    theta = 2 * np.pi * np.arange(samples) / samples
    z = radius * np.exp(1j * theta)
    lead = f.shift_down()(z)
    if np.any(np.abs(lead) < 1e-14):
        bad = theta[np.argmin(np.abs(lead))]
        raise ZeroDivisionError(f"f vanishes near theta={bad:.6g}")
    v_series = quotient_series(f, convex).truncate(f.order - 1)
    v = v_series(z)
    slack = 2 * np.abs(v) - np.abs(v * v - 1)
    n = v_series.order
    allowance = abs(v_series[n]) * radius ** n * n
    worst = float(np.min(slack))
    return bool(worst >= -(tol + allowance)), worst
