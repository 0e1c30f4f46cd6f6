"""Boundary curves of the lune and of the extremal image domains, as SVG/CSV."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from ..classes import F4_A, extremal, extremal_class, lower_extremal_parameter
from ..classes import ClassId
from .quadrature import QuadratureError, adaptive_gauss

SQRT2 = math.sqrt(2.0)
LUNE_MARKS = {"i": 1j, "-i": -1j, "1+sqrt2": 1 + SQRT2, "1-sqrt2": 1 - SQRT2}


@dataclass
class Figure:
    """One or more closed polylines sampled at the same parameter values."""

    title: str
    theta: np.ndarray
    curves: list
    metadata: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["theta", "re", "im"])
        for curve in self.curves:
            for t, v in zip(self.theta, curve):
                w.writerow([f"{t:.17g}", f"{v.real:.17g}", f"{v.imag:.17g}"])
        return buf.getvalue()

    def to_svg(self, size: int = 600) -> str:
        pts = np.concatenate(self.curves)
        lo_x, hi_x = pts.real.min(), pts.real.max()
        lo_y, hi_y = (-pts.imag).min(), (-pts.imag).max()
        mx = 0.05 * max(hi_x - lo_x, 1e-12)
        my = 0.05 * max(hi_y - lo_y, 1e-12)
        vb = (lo_x - mx, lo_y - my, hi_x - lo_x + 2 * mx, hi_y - lo_y + 2 * my)
        stroke = 0.004 * max(vb[2], vb[3])
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" '
            f'height="{size}" viewBox="{vb[0]:.9g} {vb[1]:.9g} {vb[2]:.9g} {vb[3]:.9g}">',
            f"<title>{self.title}</title>",
        ]
        for curve in self.curves:
            # SVG y grows downward
            coords = " ".join(f"{v.real:.9g},{-v.imag:.9g}" for v in curve)
            lines.append(f'<polygon points="{coords}" fill="none" stroke="black" '
                         f'stroke-width="{stroke:.6g}"/>')
        lines.append("</svg>")
        return "\n".join(lines) + "\n"


def _angles(samples: int) -> np.ndarray:
    return 2 * np.pi * np.arange(samples) / samples


def q_map(u):
    """``u + sqrt(1 + u^2)``, principal root; analytic on the closed disk."""
    u = np.asarray(u, dtype=complex)
    return u + np.sqrt(1 + u * u)


def render_lune(samples: int = 720) -> Figure:
    """Image of the unit circle under ``q`` plus its reflection ``-q``.

    ``samples`` is rounded up to a multiple of 4 so the circle points
    ``1, i, -1, -i`` (hence the vertices and real-axis ends) are sampled.
    """
    if samples < 64:
        raise ValueError("need at least 64 samples")
    samples += -samples % 4
    theta = _angles(samples)
    u = np.exp(1j * theta)
    # exact 1, i, -1, -i: rounding in cos(pi/2) would be amplified to ~1e-8
    # by the square-root branch point at the vertices
    u[::samples // 4] = [1, 1j, -1, -1j]
    right = q_map(u)
    left = -right
    allpts = np.concatenate([right, left])
    residual = np.abs(np.abs(allpts ** 2 - 1) - 2 * np.abs(allpts))
    marks = {k: float(np.min(np.abs(allpts - v))) for k, v in LUNE_MARKS.items()}
    on_axis = right[np.abs(right.imag) < 1e-12].real
    meta = {
        "samples": samples,
        "max_boundary_residual": float(residual.max()),
        "mark_distance": marks,
        "right_lobe_real_extent": [float(on_axis.min()), float(on_axis.max())],
    }
    meta["ok"] = bool(meta["max_boundary_residual"] < 1e-9
                      and max(marks.values()) < 1e-9)
    return Figure("lune |w^2 - 1| <= 2|w|", theta, [right, left], meta)


# -- evaluating the extremal maps off the series -------------------------------

def _schwarz(A: float):
    def w(t):
        return (A * t + t * t) / (1 + A * t)
    return w


def _log_quotient(w, z, tol):
    """``int_0^z (q(w(t)) - 1)/t dt`` along the segment, for a batch of ``z``."""
    z = np.asarray(z, dtype=complex)

    def integrand(v):
        zt = z[..., None] * v
        return (q_map(w(zt)) - 1) / v

    val, _ = adaptive_gauss(integrand, 0.0, 1.0, tol)
    return val


def lune_map_by_quadrature(A: float, z, convex: bool, tol: float = 1e-10):
    """Evaluate the lune-class map generated by ``rational_p(A)`` at ``z``.

    Starlike: ``z exp(int_0^z (q(w)-1)/t dt)``.  Convex: the integral of
    that exponential from 0 to ``z``.  Both integrals run along the
    straight segment from 0.
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    w = _schwarz(A)
    if not convex:
        return z * np.exp(_log_quotient(w, z, tol))

    def outer(s):
        return np.exp(_log_quotient(w, z[:, None] * s, tol))

    val, _ = adaptive_gauss(outer, 0.0, 1.0, tol)
    return z * val


def f3_closed_form(z):
    z = np.asarray(z, dtype=complex)
    s = np.sqrt(1 + z ** 4)
    return SQRT2 * z * np.exp((z * z - 1 + s) / 2) / np.sqrt(s + 1)


def extremal_parameter(name: str, A: float | None = None) -> float:
    if A is not None:
        return A
    if name == "f4":
        return F4_A
    if name == "f6":
        return lower_extremal_parameter(ClassId.CONVEX_LUNE)
    return 0.0


def evaluate_extremal(name: str, z, A: float | None = None, method: str = "auto",
                      tol: float = 1e-10):
    """Values of ``f1 ... f6`` at points ``z`` of the open disk.

    ``method``: ``closed`` (f1, f2, f3 only), ``quadrature`` (f3 ... f6) or
    ``series`` (order-400 series, for checks well inside the disk);
    ``auto`` picks closed forms where available.
    """
    z = np.asarray(z, dtype=complex)
    if method == "auto":
        method = "closed" if name in ("f1", "f2", "f3") else "quadrature"
    if method == "closed":
        if name == "f1":
            return z / (1 - z * z)
        if name == "f2":
            return np.arctanh(z)
        if name == "f3":
            return f3_closed_form(z)
        raise ValueError(f"no closed form for {name}")
    if method == "quadrature":
        if name not in ("f3", "f4", "f5", "f6"):
            raise ValueError(f"{name} has no integral representation here")
        return lune_map_by_quadrature(extremal_parameter(name, A), z,
                                      extremal_class(name).convex, tol)
    if method == "series":
        return extremal(name, 400, A)(z)
    raise ValueError(f"unknown method {method!r}")


def render_image_domain(name: str, radius: float = 0.99, samples: int = 720,
                        A: float | None = None) -> Figure:
    """Image of ``|z| = radius`` under the extremal map ``name``.

    Raises :class:`QuadratureError` listing the offending angles if the
    quadrature fails anywhere.
    """
    if not 0 < radius <= 0.995:
        raise ValueError("radius must lie in (0, 0.995]")
    theta = _angles(samples)
    z = radius * np.exp(1j * theta)
    try:
        vals = evaluate_extremal(name, z, A)
    except QuadratureError as exc:
        bad = exc.bad.reshape(len(theta), -1).any(axis=1)
        angles = ", ".join(f"{t:.6g}" for t in theta[bad])
        raise QuadratureError(f"{exc} at theta = {angles}", exc.bad) from None
    meta = {"name": name, "radius": radius, "samples": samples,
            "parameter": extremal_parameter(name, A)}
    return Figure(f"{name}(|z| = {radius:g})", theta, [vals], meta)
