"""Inverse coefficients, logarithmic and inverse logarithmic coefficients."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .powerseries import SeriesError, TruncatedSeries, log_series, revert


@dataclass(frozen=True)
class GammaPair:
    gamma1: complex
    gamma2: complex

    def __post_init__(self):
        if not (np.isfinite(self.gamma1) and np.isfinite(self.gamma2)):
            raise ValueError("inverse logarithmic coefficients must be finite")

    @property
    def moduli_diff(self) -> float:
        return moduli_diff(self)


def inverse_coeffs(a2, a3):
    """``(A2, A3)`` of ``f^{-1}`` from ``(a2, a3)`` of ``f``."""
    return -a2, 2 * a2 ** 2 - a3


def gamma_values(a2, a3):
    """Vectorized ``(Gamma1, Gamma2)``; arrays in, arrays out."""
    return -0.5 * a2, -0.5 * a3 + 0.75 * a2 ** 2


def inv_log_coeffs(a2, a3) -> GammaPair:
    g1, g2 = gamma_values(a2, a3)
    return GammaPair(complex(g1), complex(g2))


def moduli_diff(g: GammaPair) -> float:
    return abs(g.gamma2) - abs(g.gamma1)


def moduli_diff_values(a2, a3):
    """``|Gamma2| - |Gamma1|`` straight from ``(a2, a3)``, vectorized."""
    g1, g2 = gamma_values(np.asarray(a2), np.asarray(a3))
    return np.abs(g2) - np.abs(g1)


def _half_log_coeffs(g: TruncatedSeries, n_max: int) -> list[complex]:
    if n_max >= g.order + 1:
        raise SeriesError(f"n_max={n_max} needs series order > {n_max}")
    # g = f/z is known through degree N-1; drop the unknown top term
    g = g.truncate(max(2, g.order - 1))
    L = log_series(g)
    return [complex(L[n] / 2) for n in range(1, n_max + 1)]


def _check_normalized(f: TruncatedSeries) -> None:
    if abs(f[0]) > 1e-12 or abs(f[1] - 1) > 1e-12:
        raise SeriesError("f must satisfy f(0) = 0, f'(0) = 1")


def log_coeffs_series(f: TruncatedSeries, n_max: int) -> list[complex]:
    """``gamma_1 ... gamma_{n_max}`` from ``log(f(z)/z) = 2 sum gamma_n z^n``."""
    _check_normalized(f)
    return _half_log_coeffs(f.shift_down(), n_max)


def inv_log_coeffs_series(f: TruncatedSeries, n_max: int) -> list[complex]:
    """``Gamma_1 ... Gamma_{n_max}`` via the reverted series of ``f``."""
    _check_normalized(f)
    return _half_log_coeffs(revert(f).shift_down(), n_max)
