"""Per-theorem verification reports and direct searches over the body."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..caratheodory import body_coeffs, p_from_schwarz, rational_p
from ..classes import (F4_A, PRINTED_F6_A, ClassId, coeffs_from_p, extremal,
                       lower_extremal_parameter, series_from_p)
from ..functionals import inv_log_coeffs_series, moduli_diff_values
from ..powerseries import TruncatedSeries, reciprocal
from ..psi import (DEFAULT_GRID, BodySearchResult, maximize_over_body,
                   oracle_max, psi_minus_bound, psi_plus_bound, psi_plus_value)

CLOSED_FORM_TOL = 1e-6
ORACLE_TOL = 1e-4
SOUND_TOL = 1e-9
DUAL_PATH_TOL = 1e-6


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    cls: ClassId
    claimed_upper: float
    extremal_upper: str
    claimed_lower: float | None = None
    extremal_lower: str | None = None
    # prefactors printed alongside the one that the coefficient identities give
    printed_scales: tuple = ()


THEOREMS = {
    "1.1": TheoremSpec("1.1", ClassId.STARLIKE_SYMMETRIC, 0.5, "f1",
                       printed_scales=(Fraction(1, 16), Fraction(1, 48))),
    "1.2": TheoremSpec("1.2", ClassId.CONVEX_SYMMETRIC, 1 / 6, "f2",
                       printed_scales=(Fraction(1, 192), Fraction(1, 16))),
    "1.3": TheoremSpec("1.3", ClassId.STARLIKE_LUNE, 0.25, "f3",
                       -1 / math.sqrt(10), "f4",
                       printed_scales=(Fraction(1, 32),)),
    "1.4": TheoremSpec("1.4", ClassId.CONVEX_LUNE, 1 / 12, "f5",
                       -4 / 21, "f6",
                       printed_scales=(Fraction(1, 192), Fraction(1, 16))),
}


@dataclass
class Discrepancy:
    kind: str
    where: str
    printed: object
    computed: object
    note: str

    def to_dict(self):
        return dict(kind=self.kind, where=self.where, printed=self.printed,
                    computed=self.computed, note=self.note)


@dataclass
class VerificationReport:
    theorem: str
    cls: str
    claimed_upper: float
    claimed_lower: float | None
    closed_form_upper: float
    closed_form_lower: float
    oracle_upper: float
    oracle_lower: float
    oracle_upper_point: tuple
    oracle_lower_point: tuple
    search_max: float
    search_min: float
    extremal_values: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    discrepancies: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self):
        d = {k: getattr(self, k) for k in (
            "theorem", "cls", "claimed_upper", "claimed_lower",
            "closed_form_upper", "closed_form_lower", "oracle_upper",
            "oracle_lower", "search_max", "search_min")}
        d["class"] = d.pop("cls")
        d["oracle_upper_point"] = list(self.oracle_upper_point)
        d["oracle_lower_point"] = list(self.oracle_lower_point)
        d["extremal_values"] = dict(self.extremal_values)
        d["checks"] = dict(self.checks)
        d["discrepancies"] = [x.to_dict() for x in self.discrepancies]
        d["pass"] = self.passed
        return d


@dataclass
class SearchResult:
    cls: ClassId
    min: float
    max: float
    argmin: BodySearchResult
    argmax: BodySearchResult


def search_class(cls: ClassId, grid=DEFAULT_GRID, **kw) -> SearchResult:
    """Extremes of ``|Gamma2| - |Gamma1|`` over the body, composed directly
    from the coefficient maps (no Psi functional involved)."""
    def objective(c1, c2):
        return moduli_diff_values(*coeffs_from_p(cls, c1, c2))

    hi = maximize_over_body(objective, grid=grid, **kw)
    lo = maximize_over_body(lambda c1, c2: -objective(c1, c2), grid=grid, **kw)
    return SearchResult(cls, -lo.value, hi.value, lo, hi)


def extremal_value(name: str, order: int = 12, A: float | None = None) -> float:
    """``|Gamma2| - |Gamma1|`` of an extremal function, via series reversion."""
    g1, g2 = inv_log_coeffs_series(extremal(name, order, A), 2)
    return abs(g2) - abs(g1)


def _point(res: BodySearchResult):
    c1, c2 = res.coeffs
    return (res.x, res.rho, res.phi, c1, c2)


def _measured_scale(cls: ClassId, rng, n: int = 64):
    # ratio of the moduli difference to Psi+ at random body points
    z1 = np.sqrt(rng.uniform(0, 1, n)) * np.exp(2j * np.pi * rng.uniform(0, 1, n))
    z2 = np.sqrt(rng.uniform(0, 1, n)) * np.exp(2j * np.pi * rng.uniform(0, 1, n))
    c1, c2 = body_coeffs(z1, z2)
    psi = psi_plus_value(c1, c2, cls.B)
    diff = moduli_diff_values(*coeffs_from_p(cls, c1, c2))
    keep = np.abs(psi) > 1e-3
    ratios = diff[keep] / psi[keep]
    return float(np.median(ratios)), float(np.ptp(ratios))


def _spot_check(cls: ClassId, upper: float, lower: float, rng, n: int = 10_000) -> bool:
    z1 = np.sqrt(rng.uniform(0, 1, n)) * np.exp(2j * np.pi * rng.uniform(0, 1, n))
    z2 = np.sqrt(rng.uniform(0, 1, n)) * np.exp(2j * np.pi * rng.uniform(0, 1, n))
    vals = moduli_diff_values(*coeffs_from_p(cls, *body_coeffs(z1, z2)))
    return bool(vals.max() <= upper + SOUND_TOL and vals.min() >= lower - SOUND_TOL)


def verify_theorem(spec: TheoremSpec | str, tolerance: float = CLOSED_FORM_TOL,
                   seed: int = 0, grid=DEFAULT_GRID) -> VerificationReport:
    if isinstance(spec, str):
        spec = THEOREMS[spec]
    cls = spec.cls
    scale = float(cls.scale)
    B = cls.B
    closed_upper = scale * psi_plus_bound(B)
    closed_lower = -scale * psi_minus_bound(B)
    up = oracle_max(B, "plus", grid=grid)
    down = oracle_max(B, "minus", grid=grid)
    oracle_upper = scale * up.value
    oracle_lower = -scale * down.value
    search = search_class(cls, grid=grid)
    rng = np.random.default_rng(seed)

    rep = VerificationReport(
        spec.id, cls.tag, spec.claimed_upper, spec.claimed_lower,
        closed_upper, closed_lower, oracle_upper, oracle_lower,
        _point(up), _point(down), search.max, search.min)
    ck = rep.checks
    ck["closed_form_upper"] = abs(closed_upper - spec.claimed_upper) <= tolerance
    ck["oracle_upper_sound"] = oracle_upper <= closed_upper + SOUND_TOL
    ck["oracle_upper_sharp"] = oracle_upper >= spec.claimed_upper - ORACLE_TOL
    ck["oracle_lower_sound"] = oracle_lower >= closed_lower - SOUND_TOL
    ck["dual_path_upper"] = abs(search.max - oracle_upper) <= DUAL_PATH_TOL
    ck["dual_path_lower"] = abs(search.min - oracle_lower) <= DUAL_PATH_TOL
    if spec.claimed_lower is not None:
        ck["closed_form_lower"] = abs(closed_lower - spec.claimed_lower) <= tolerance
        ck["oracle_lower_sharp"] = oracle_lower <= spec.claimed_lower + ORACLE_TOL

    measured, spread = _measured_scale(cls, rng)
    ck["scale_factor"] = abs(measured - scale) <= 1e-12 and spread <= 1e-12
    ck["random_points_within_bounds"] = _spot_check(cls, closed_upper, closed_lower, rng)

    v = extremal_value(spec.extremal_upper)
    rep.extremal_values[spec.extremal_upper] = v
    ck[f"extremal_{spec.extremal_upper}_attains_upper"] = abs(v - spec.claimed_upper) <= tolerance
    if spec.extremal_lower is not None:
        v = extremal_value(spec.extremal_lower)
        rep.extremal_values[spec.extremal_lower] = v
        ck[f"extremal_{spec.extremal_lower}_attains_lower"] = (
            abs(v - spec.claimed_lower) <= tolerance)

    for s in spec.printed_scales:
        if s != cls.scale:
            rep.discrepancies.append(Discrepancy(
                "scale_factor", f"T{spec.id} Psi prefactor",
                str(s), str(cls.scale),
                f"the prefactor {s} is printed next to {cls.scale}; the "
                f"coefficient identities give {cls.scale} (measured "
                f"{measured:.17g}), and {s} would give the upper bound "
                f"{float(s) * psi_plus_bound(B):.17g} instead of {spec.claimed_upper:.17g}"))

    _theorem_specific(spec, rep, down)
    return rep


def _theorem_specific(spec: TheoremSpec, rep: VerificationReport,
                      down: BodySearchResult) -> None:
    ck = rep.checks
    if spec.id == "1.1":
        # printed generating function of f1: (1+z)/(1-z)
        stated = series_from_p(ClassId.STARLIKE_SYMMETRIC, rational_p(1.0))
        val = moduli_diff_values(stated[2], stated[3])
        rep.extremal_values["f1_from_(1+z)/(1-z)"] = float(val)
        rep.discrepancies.append(Discrepancy(
            "extremal_generator", "T1.1 generating function of f1",
            "(1+z)/(1-z)", "(1+z^2)/(1-z^2)",
            "z/(1-z^2) is odd, so its symmetric-point quotient is z f'/f = "
            "(1+z^2)/(1-z^2); the printed (1+z)/(1-z) generates z/(1-z), "
            f"whose moduli difference is {float(val):.17g}"))
    elif spec.id == "1.3":
        c1, c2 = rep.oracle_lower_point[3:]
        ck["lower_attained_at_f4_point"] = (abs(c1 - 2 * F4_A) <= 1e-6
                                            and abs(c2 - 2) <= 1e-6)
        # printed Schwarz function (Az+z^2)/(1-z^2) versus (p-1)/(p+1)
        order = 12
        w_printed = (TruncatedSeries([0, F4_A, 1], order)
                     * reciprocal(TruncatedSeries([1, 0, -1], order)))
        f_printed = series_from_p(ClassId.STARLIKE_LUNE, p_from_schwarz(w_printed))
        val = moduli_diff_values(f_printed[2], f_printed[3])
        rep.extremal_values["f4_from_printed_schwarz"] = float(val)
        rep.discrepancies.append(Discrepancy(
            "schwarz_function", "T1.3 Schwarz function of f4",
            "(Az+z^2)/(1-z^2)", "(Az+z^2)/(1+Az)",
            "(p-1)/(p+1) for p = (1+2Az+z^2)/(1-z^2) is (Az+z^2)/(1+Az); the "
            f"printed form leads to moduli difference {float(val):.17g}; "
            "the first two coefficients agree only up to z^2, and the "
            "implementation uses (p-1)/(p+1)"))
    elif spec.id == "1.4":
        A = lower_extremal_parameter(ClassId.CONVEX_LUNE)
        c1, c2 = rep.oracle_lower_point[3:]
        ck["lower_attained_at_12/7_2"] = abs(c1 - 12 / 7) <= 1e-6 and abs(c2 - 2) <= 1e-6
        v_printed = extremal_value("f6", A=PRINTED_F6_A)
        rep.extremal_values["f6_A=4/7"] = v_printed
        rep.extremal_values["f6_A"] = A
        rep.discrepancies.append(Discrepancy(
            "extremal_constant", "T1.4 extremal constant A of f6",
            {"A": "4/7", "value": v_printed},
            {"A": A, "value": rep.extremal_values["f6"]},
            f"A = 4/7 gives |Gamma2|-|Gamma1| = {v_printed:.17g} (= -3/28), not "
            f"the claimed -4/21; the oracle minimum lies at c1 = 12/7, c2 = 2, "
            f"i.e. A = 6/7, which attains -4/21"))
