"""The functionals ``Psi+ = |B2 c1^2 + B3 c2| - |B1 c1|`` and ``Psi- = -Psi+``.

Two independent routes to their maxima over the Carathéodory body:

* :func:`psi_plus_bound` / :func:`psi_minus_bound` -- the piecewise closed form;
* :func:`oracle_max` -- brute force: a coarse grid over the rotation-reduced
  Schur parameters followed by a shrinking compass search.

:func:`maximize_over_body` is the search engine itself and accepts any
vectorized objective of ``(c1, c2)``; the harness reuses it to search the
moduli difference directly.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .caratheodory import CaratheodoryPoint, body_coeffs

DEFAULT_GRID = (96, 48, 96)
DEFAULT_REFINE = 40
DEFAULT_STEP = 0.05
DEFAULT_STARTS = 4


@dataclass(frozen=True)
class PsiCoeffs:
    B1: float
    B2: complex
    B3: float

    def __post_init__(self):
        b3 = complex(self.B3)
        if b3.imag != 0:
            raise ValueError("B3 must be real")
        b1 = float(self.B1)
        if not b1 > 0:
            raise ValueError(f"B1 must be positive, got {self.B1}")
        # plain Python scalars keep scalar evaluation cheap
        object.__setattr__(self, "B1", b1)
        object.__setattr__(self, "B2", complex(self.B2))
        object.__setattr__(self, "B3", b3.real)

    @property
    def B4(self) -> float:
        return abs(4 * self.B2 + 2 * self.B3)


def psi_plus_value(c1, c2, B: PsiCoeffs):
    # builtin abs keeps Python scalars on the fast path and maps over arrays
    return abs(B.B2 * c1 ** 2 + B.B3 * c2) - abs(B.B1 * c1)


def psi_minus_value(c1, c2, B: PsiCoeffs):
    return -psi_plus_value(c1, c2, B)


def psi_plus_branch(B: PsiCoeffs) -> int:
    """1 for the ``B4 - 2 B1`` case, 2 for ``2|B3|``."""
    return 1 if abs(2 * B.B2 + B.B3) >= abs(B.B3) + B.B1 else 2


def psi_plus_bound(B: PsiCoeffs) -> float:
    if psi_plus_branch(B) == 1:
        return B.B4 - 2 * B.B1
    return 2 * abs(B.B3)


def psi_minus_branch(B: PsiCoeffs) -> int:
    """Index (1, 2, 3) of the first case whose guard holds, in listed order."""
    b3 = abs(B.B3)
    if B.B1 >= B.B4 + 2 * b3:
        return 1
    if B.B1 ** 2 <= 2 * b3 * (B.B4 + 2 * b3):
        return 2
    return 3


def psi_minus_bound(B: PsiCoeffs) -> float:
    b3 = abs(B.B3)
    denom = B.B4 + 2 * b3
    case = psi_minus_branch(B)
    if case == 1:
        return 2 * B.B1 - B.B4
    if denom == 0:
        # unreachable for B1 > 0 (case 1 then holds), kept as a guard
        raise ZeroDivisionError("degenerate Psi- bound: B4 + 2|B3| = 0")
    if case == 2:
        return 2 * B.B1 * math.sqrt(2 * b3 / denom)
    return 2 * b3 + B.B1 ** 2 / denom


@dataclass
class BodySearchResult:
    """Outcome of a body search.

    ``x, rho, phi`` are the rotation-reduced parameters of the best point;
    ``history`` holds the best value after the grid stage and after each
    refinement round.
    """

    value: float
    x: float
    rho: float
    phi: float
    history: list = field(default_factory=list)

    @property
    def point(self) -> CaratheodoryPoint:
        return CaratheodoryPoint.from_polar(self.x, self.rho, self.phi)

    @property
    def coeffs(self) -> tuple[complex, complex]:
        c1, c2 = body_coeffs(self.x, self.rho * np.exp(1j * self.phi))
        return complex(c1), complex(c2)


def _eval(objective, x, rho, phi):
    c1, c2 = body_coeffs(x, rho * np.exp(1j * phi))
    return np.asarray(objective(c1, c2), dtype=float)


def _clip(u):
    return (min(max(float(u[0]), 0.0), 1.0), min(max(float(u[1]), 0.0), 1.0),
            float(u[2]) % (2 * math.pi))


def _polish(objective, c):
    def neg(u):
        x, rho, phi = _clip(u)
        c2 = 2 * x * x + 2 * (1 - x * x) * rho * cmath.exp(1j * phi)
        return -float(objective(2 * x, c2))

    start = np.array(c[:3], dtype=float)
    for _ in range(2):
        res = minimize(neg, start, method="Nelder-Mead",
                       options=dict(xatol=1e-11, fatol=1e-13, maxiter=800,
                                    initial_simplex=start + np.vstack(
                                        [np.zeros(3), 1e-3 * np.eye(3)])))
        if -res.fun > c[3]:
            c[:] = [*_clip(res.x), -res.fun]
        start = np.array(c[:3], dtype=float)


def maximize_over_body(objective, grid=DEFAULT_GRID, refine: int = DEFAULT_REFINE,
                       step: float = DEFAULT_STEP,
                       starts: int = DEFAULT_STARTS,
                       polish: bool = True) -> BodySearchResult:
    """Maximize ``objective(c1, c2)`` over the Carathéodory body.

    The objective must be invariant under ``(c1, c2) -> (e^{it} c1, e^{2it} c2)``
    so that ``zeta1`` can be restricted to ``[0, 1]``.

    Stage one evaluates ``objective`` on an ``nx * nrho * nphi`` grid
    (x and rho include both endpoints, phi covers ``[0, 2 pi)``).  Stage two
    runs a compass search from the ``starts`` best grid points: each round
    moves to the best improving axis neighbour until none improves, then
    halves the step.  The phi step is ``2 pi`` times the x/rho step.  A
    Nelder-Mead pass from the two best points then follows ridges that no fixed
    stencil can climb (e.g. where x and rho must move together); it only
    replaces a point when it strictly improves it, so the value history is
    non-decreasing.
    Ties resolve to the lexicographically smallest ``(x, rho, phi)``.
    """
    nx, nr, nphi = grid
    if min(grid) < 2 or nx < 32:
        raise ValueError(f"grid too coarse: {grid}")
    xs = np.linspace(0.0, 1.0, nx)
    rs = np.linspace(0.0, 1.0, nr)
    ps = 2 * np.pi * np.arange(nphi) / nphi
    vals = _eval(objective, xs[:, None, None], rs[None, :, None], ps[None, None, :])
    flat = vals.ravel()
    # stable sort keeps C order (lexicographic) among equal values
    order = np.argsort(-flat, kind="stable")[:max(1, starts)]
    pts = [np.unravel_index(i, vals.shape) for i in order]
    cand = [[xs[i], rs[j], ps[k], flat[n]] for (i, j, k), n in zip(pts, order)]

    best = max(cand, key=lambda c: c[3])
    history = [best[3]]
    directions = np.array([d for d in itertools.product((-1, 0, 1), repeat=3)
                           if any(d)], dtype=float)
    h = step
    for _ in range(refine):
        scale = np.array([h, h, 2 * np.pi * h])
        for c in cand:
            for _move in range(200):
                trial = c[:3] + directions * scale
                trial[:, 0] = np.clip(trial[:, 0], 0.0, 1.0)
                trial[:, 1] = np.clip(trial[:, 1], 0.0, 1.0)
                trial[:, 2] = np.mod(trial[:, 2], 2 * np.pi)
                tv = _eval(objective, trial[:, 0], trial[:, 1], trial[:, 2])
                k = int(np.argmax(tv))
                if tv[k] > c[3]:
                    c[:] = [*trial[k], tv[k]]
                else:
                    break
        # earlier (better-ranked) start wins ties
        best = max(cand, key=lambda c: c[3])
        history.append(best[3])
        h /= 2
    if polish:
        for c in sorted(cand, key=lambda c: -c[3])[:2]:
            _polish(objective, c)
        best = max(cand, key=lambda c: c[3])
        history.append(best[3])
    return BodySearchResult(float(best[3]), float(best[0]), float(best[1]),
                            float(best[2]), history)


def oracle_max(B: PsiCoeffs, sign: str = "plus", grid=DEFAULT_GRID,
               refine: int = DEFAULT_REFINE, **kw) -> BodySearchResult:
    """Brute-force maximum of ``Psi+`` (``sign='plus'``) or ``Psi-``."""
    if sign == "plus":
        def objective(c1, c2):
            return psi_plus_value(c1, c2, B)
    elif sign == "minus":
        def objective(c1, c2):
            return psi_minus_value(c1, c2, B)
    else:
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    return maximize_over_body(objective, grid=grid, refine=refine, **kw)
