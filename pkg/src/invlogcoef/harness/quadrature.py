"""Adaptive composite Gauss-Legendre quadrature for batches of integrands.

``integrand(t)`` receives a 1-d array of nodes in ``[a, b]`` and returns an
array of shape ``batch + (len(t),)``; the routine integrates every batch
component at once.  A panel is accepted when the ``n``-point rule on it
agrees with the sum over its two halves to ``tol`` in every component.
"""

from __future__ import annotations

import numpy as np

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(16)


class QuadratureError(RuntimeError):
    """A panel hit the depth limit without meeting the tolerance.

    ``bad`` is a boolean mask over the batch marking components whose
    accumulated error estimate exceeds the tolerance.
    """

    def __init__(self, msg, bad):
        super().__init__(msg)
        self.bad = bad


def _rule(integrand, a, b):
    half = 0.5 * (b - a)
    t = a + half * (_NODES + 1.0)
    return half * (np.asarray(integrand(t)) @ _WEIGHTS)


def adaptive_gauss(integrand, a: float, b: float, tol: float = 1e-10,
                   max_depth: int = 30):
    """Return ``(value, error_estimate)``; both have the batch shape."""
    whole = _rule(integrand, a, b)
    total = np.zeros_like(whole)
    err = np.zeros(whole.shape, dtype=float)
    stack = [(a, b, whole, 0)]
    while stack:
        lo, hi, coarse, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _rule(integrand, lo, mid)
        right = _rule(integrand, mid, hi)
        fine = left + right
        local = np.abs(fine - coarse)
        # per-panel share of the tolerance, proportional to panel length
        share = tol * (hi - lo) / (b - a)
        if np.all(local <= max(share, 1e-15)) or depth >= max_depth:
            total = total + fine
            err = err + local
            continue
        stack.append((mid, hi, right, depth + 1))
        stack.append((lo, mid, left, depth + 1))
    bad = err > tol
    if np.any(bad):
        raise QuadratureError(
            f"quadrature did not reach tol={tol:g} on {int(bad.sum())} component(s)", bad)
    return total, err
