"""Carathéodory functions: the two-coefficient body and the p <-> w transfer.

The attainable pairs ``(c1, c2)`` of ``p = 1 + c1 z + c2 z^2 + ...`` with
``Re p > 0`` are exactly

    c1 = 2 zeta1,   c2 = 2 zeta1^2 + 2 (1 - |zeta1|^2) zeta2,

with ``zeta1, zeta2`` in the closed unit disk (Schur parameters).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .powerseries import (DEFAULT_ORDER, SeriesError, TruncatedSeries,
                          reciprocal)

_DISK_TOL = 1e-12


@dataclass(frozen=True)
class CaratheodoryPoint:
    zeta1: complex
    zeta2: complex

    def __post_init__(self):
        for name in ("zeta1", "zeta2"):
            v = complex(getattr(self, name))
            if abs(v) > 1 + _DISK_TOL:
                raise ValueError(f"{name}={v} lies outside the closed unit disk")
            object.__setattr__(self, name, v)

    @classmethod
    def from_polar(cls, x: float, rho: float, phi: float) -> "CaratheodoryPoint":
        """Rotation-reduced parameters: ``zeta1 = x`` real, ``zeta2 = rho e^{i phi}``."""
        return cls(complex(x), rho * np.exp(1j * phi))


def body_coeffs(zeta1, zeta2):
    """Vectorized ``(c1, c2)`` from Schur parameters (no range checks)."""
    zeta1 = np.asarray(zeta1, dtype=complex)
    c1 = 2.0 * zeta1
    c2 = 2.0 * zeta1 ** 2 + 2.0 * (1.0 - np.abs(zeta1) ** 2) * np.asarray(zeta2)
    return c1, c2


def to_coeffs(pt: CaratheodoryPoint) -> tuple[complex, complex]:
    c1, c2 = body_coeffs(pt.zeta1, pt.zeta2)
    return complex(c1), complex(c2)


def rational_p(A: float, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Series of ``(1 + 2 A z + z^2) / (1 - z^2)``; ``c1 = 2A`` and ``c2 = 2``."""
    if not 0.0 <= A <= 1.0:
        raise ValueError(f"A must lie in [0, 1], got {A}")
    num = TruncatedSeries([1.0, 2.0 * A, 1.0], order)
    den = TruncatedSeries([1.0, 0.0, -1.0], order)
    return num * reciprocal(den)


def schwarz_from_p(p: TruncatedSeries) -> TruncatedSeries:
    """``w = (p - 1) / (p + 1)``."""
    if abs(p[0] - 1.0) > _DISK_TOL:
        raise SeriesError(f"p must have constant term 1, got {p[0]}")
    w = (p - 1.0) * reciprocal(p + 1.0)
    c = w.coeffs.copy()
    c[0] = 0.0
    return TruncatedSeries(c)


def p_from_schwarz(w: TruncatedSeries) -> TruncatedSeries:
    """Inverse transfer ``p = (1 + w) / (1 - w)``."""
    if abs(w[0]) > _DISK_TOL:
        raise SeriesError("a Schwarz function must vanish at 0")
    return (1.0 + w) * reciprocal(1.0 - w)
