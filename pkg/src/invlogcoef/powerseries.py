"""Truncated power series with complex coefficients.

A :class:`TruncatedSeries` of order ``N`` holds ``c_0 ... c_N`` and stands for
``sum c_k z^k + O(z^(N+1))``.  Every operation returns a result that is exact
in degrees ``0 ... N``; nothing beyond degree ``N`` is ever kept.

The recurrences (reciprocal, exp, log, sqrt) are the plain O(N^2) ones.  The
orders used here are a few dozen up to a couple of thousand, so there is no
point in FFT tricks.
"""

from __future__ import annotations

from numbers import Number

import numpy as np

DEFAULT_ORDER = 12
_UNIT_TOL = 1e-12


class SeriesError(ValueError):
    """Raised on order mismatches and violated normalizations."""


def _mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = len(a)
    return np.convolve(a, b)[:n]


def _recip(a: np.ndarray) -> np.ndarray:
    n = len(a)
    out = np.zeros(n, dtype=complex)
    inv0 = 1.0 / a[0]
    out[0] = inv0
    for k in range(1, n):
        # sum_{j=1..k} a_j out_{k-j}
        out[k] = -inv0 * np.dot(a[1:k + 1], out[k - 1::-1])
    return out


def _exp(a: np.ndarray) -> np.ndarray:
    # (exp a)' = a' exp a  =>  k b_k = sum_{j=1..k} j a_j b_{k-j}
    n = len(a)
    ja = np.arange(n) * a
    out = np.zeros(n, dtype=complex)
    out[0] = 1.0
    for k in range(1, n):
        out[k] = np.dot(ja[1:k + 1], out[k - 1::-1]) / k
    return out


def _log(a: np.ndarray) -> np.ndarray:
    # a = exp(L):  k a_k = sum_{j=1..k} j L_j a_{k-j}
    n = len(a)
    out = np.zeros(n, dtype=complex)
    for k in range(1, n):
        acc = k * a[k] - np.dot(np.arange(1, k) * out[1:k], a[k - 1:0:-1])
        out[k] = acc / (k * a[0])
    return out


def _sqrt(a: np.ndarray) -> np.ndarray:
    n = len(a)
    out = np.zeros(n, dtype=complex)
    out[0] = 1.0
    for k in range(1, n):
        acc = a[k] - np.dot(out[1:k], out[k - 1:0:-1])
        out[k] = acc / 2.0
    return out


class TruncatedSeries:
    """Immutable truncated power series ``c_0 + c_1 z + ... + c_N z^N``.

    Parameters
    ----------
    coeffs : sequence of complex
        Leading coefficients.  Shorter input is zero padded, longer input is
        cut at ``order``.
    order : int, optional
        Truncation degree ``N`` (at least 2).  Defaults to ``len(coeffs) - 1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs, order: int | None = None):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        if c.ndim != 1:
            raise SeriesError("coefficients must form a flat sequence")
        if order is None:
            order = len(c) - 1
        if order < 2:
            raise SeriesError(f"truncation order must be >= 2, got {order}")
        buf = np.zeros(order + 1, dtype=complex)
        m = min(len(c), order + 1)
        buf[:m] = c[:m]
        buf.flags.writeable = False
        self._c = buf

    # -- constructors -----------------------------------------------------

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        arr = np.array(arr, dtype=complex)
        arr.flags.writeable = False
        obj._c = arr
        return obj

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """The series ``z``."""
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, degree: int, coeff=1.0,
                 order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=complex)
        if degree <= order:
            c[degree] = coeff
        return cls._wrap(c)

    # -- basic access -------------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only view of ``c_0 ... c_N``."""
        return self._c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, k):
        return self._c[k]

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __repr__(self):
        terms = ", ".join(f"{c:.6g}" for c in self._c[:6])
        more = ", ..." if self.order > 5 else ""
        return f"TruncatedSeries([{terms}{more}], order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and np.array_equal(self._c, other._c)

    __hash__ = None

    def allclose(self, other, atol: float = 1e-12) -> bool:
        other = _coerce(other, self.order)
        _check_orders(self, other)
        return bool(np.max(np.abs(self._c - other._c)) <= atol)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Change the truncation degree (pads with zeros when growing)."""
        return TruncatedSeries(self._c, order)

    def __call__(self, z):
        """Evaluate the polynomial part at ``z`` (scalar or array)."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for c in self._c[::-1]:
            acc = acc * z + c
        return acc[()] if acc.ndim == 0 else acc

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._wrap(-self._c)

    def __sub__(self, other):
        return add(self, -_coerce(other, self.order))

    def __rsub__(self, other):
        return add(_coerce(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries._wrap(self._c * other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, Number):
            return TruncatedSeries._wrap(self._c / other)
        return mul(self, reciprocal(other))

    def __rtruediv__(self, other):
        return mul(_coerce(other, self.order), reciprocal(self))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise SeriesError("only non-negative integer powers are supported")
        out = TruncatedSeries.constant(1.0, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift_down(self) -> "TruncatedSeries":
        """Divide by ``z``.  Requires ``c_0 == 0``; degree ``N`` becomes unknown
        and is returned as zero with the order unchanged."""
        if self._c[0] != 0:
            raise SeriesError("cannot divide by z: nonzero constant term")
        c = np.zeros_like(self._c)
        c[:-1] = self._c[1:]
        return TruncatedSeries._wrap(c)

    def shift_up(self) -> "TruncatedSeries":
        """Multiply by ``z`` (the coefficient pushed past degree N is dropped)."""
        c = np.zeros_like(self._c)
        c[1:] = self._c[:-1]
        return TruncatedSeries._wrap(c)


def _coerce(x, order: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    if isinstance(x, Number):
        return TruncatedSeries.constant(x, order)
    raise TypeError(f"cannot combine TruncatedSeries with {type(x).__name__}")


def _check_orders(s: TruncatedSeries, t: TruncatedSeries) -> None:
    if s.order != t.order:
        raise SeriesError(f"order mismatch: {s.order} vs {t.order}")


def _require_unit_constant(s: TruncatedSeries, what: str) -> None:
    if abs(s[0] - 1.0) > _UNIT_TOL:
        raise SeriesError(f"{what} needs constant term 1, got {s[0]}")


def add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    _check_orders(s, t)
    return TruncatedSeries._wrap(s.coeffs + t.coeffs)


def mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(s, t)
    return TruncatedSeries._wrap(_mul(s.coeffs, t.coeffs))


def reciprocal(s: TruncatedSeries) -> TruncatedSeries:
    if s[0] == 0:
        raise SeriesError("reciprocal of a series with zero constant term")
    return TruncatedSeries._wrap(_recip(s.coeffs))


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(z))`` by Horner's scheme.  ``inner`` must vanish at 0."""
    _check_orders(outer, inner)
    if inner[0] != 0:
        raise SeriesError("inner series of a composition must have c_0 = 0")
    b = inner.coeffs
    acc = np.zeros(len(b), dtype=complex)
    for c in outer.coeffs[::-1]:
        acc = _mul(acc, b)
        acc[0] += c
    return TruncatedSeries._wrap(acc)


def exp_series(s: TruncatedSeries) -> TruncatedSeries:
    if s[0] != 0:
        raise SeriesError("exp_series expects a zero constant term")
    return TruncatedSeries._wrap(_exp(s.coeffs))


def log_series(s: TruncatedSeries) -> TruncatedSeries:
    _require_unit_constant(s, "log_series")
    return TruncatedSeries._wrap(_log(s.coeffs))


def sqrt_series(s: TruncatedSeries) -> TruncatedSeries:
    """Square root on the branch with value +1 at the origin."""
    _require_unit_constant(s, "sqrt_series")
    c = s.coeffs.copy()
    c[0] = 1.0
    return TruncatedSeries._wrap(_sqrt(c))


def derivative(s: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative; the top coefficient of the result is zero."""
    c = np.zeros_like(s.coeffs)
    c[:-1] = np.arange(1, s.order + 1) * s.coeffs[1:]
    return TruncatedSeries._wrap(c)


def integrate0(s: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative vanishing at 0.

    Coefficient ``k`` of the result is ``c_{k-1} / k`` for ``k = 1 ... N``.
    The degree ``N + 1`` term ``c_N / (N + 1)`` does not fit and is discarded,
    so ``c_N`` of the input never influences the output.
    """
    c = np.zeros_like(s.coeffs)
    c[1:] = s.coeffs[:-1] / np.arange(1, s.order + 1)
    return TruncatedSeries._wrap(c)


def revert(s: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse of ``s = z + a_2 z^2 + ...``.

    Uses Lagrange inversion: the coefficient of ``w^n`` in the inverse is
    ``[z^(n-1)] (z / s(z))^n / n``.
    """
    if abs(s[0]) > _UNIT_TOL or abs(s[1] - 1.0) > _UNIT_TOL:
        raise SeriesError("revert needs c_0 = 0 and c_1 = 1")
    n_max = s.order
    # z/s(z) is known through degree N-1
    phi = _recip(s.coeffs[1:])
    power = phi.copy()
    out = np.zeros(n_max + 1, dtype=complex)
    for n in range(1, n_max + 1):
        out[n] = power[n - 1] / n
        power = _mul(power, phi)
    out[1] = 1.0
    return TruncatedSeries._wrap(out)
