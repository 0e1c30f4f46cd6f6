"""Command line entry point.

Exit codes: 0 all checks pass and nothing is flagged; 2 checks pass but known
discrepancies were flagged; 1 a check failed (or a flagged discrepancy under
``--strict``); 64 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from ..classes import EXTREMAL_NAMES, ClassId, extremal, extremal_class
from ..functionals import inv_log_coeffs, inv_log_coeffs_series, log_coeffs_series
from . import report
from .quadrature import QuadratureError
from .render import render_image_domain, render_lune
from .verify import CLOSED_FORM_TOL, THEOREMS, search_class, verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_FLAGGED, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = {"default": argparse.SUPPRESS} if suppress else {}
    p.add_argument("--json", action="store_true", help="machine-readable output", **d)
    p.add_argument("--csv", action="store_true", help="CSV output where applicable", **d)
    p.add_argument("--seed", type=int, help="seed for randomized spot checks",
                   **(d or {"default": 0}))
    p.add_argument("--tolerance", type=float,
                   help="tolerance for closed-form and extremal comparisons",
                   **(d or {"default": CLOSED_FORM_TOL}))
    p.add_argument("--strict", action="store_true",
                   help="treat flagged discrepancies as failures", **d)
    p.add_argument("--out", type=Path, help="write output to this path", **d)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="invlogcoef",
                     description="Verify sharp bounds on |Gamma2| - |Gamma1|.")
    _globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="verification report per theorem")
    p.add_argument("--theorem", default="all", choices=[*THEOREMS, "all"])
    _globals(p, True)

    p = sub.add_parser("search", help="extremes of the moduli difference over the body")
    p.add_argument("--class", dest="cls", required=True,
                   choices=[c.tag for c in ClassId])
    p.add_argument("--grid", type=int, default=96,
                   help="x and phi resolution (rho uses half)")
    _globals(p, True)

    p = sub.add_parser("extremal", help="series and coefficients of an extremal function")
    p.add_argument("--name", required=True, choices=EXTREMAL_NAMES)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--A", type=float, default=None, help="parameter of f4/f6")
    _globals(p, True)

    p = sub.add_parser("render-lune", help="lune boundary as SVG + CSV")
    p.add_argument("--samples", type=int, default=720)
    _globals(p, True)

    p = sub.add_parser("render-image", help="extremal image domain as SVG + CSV")
    p.add_argument("--name", required=True, choices=EXTREMAL_NAMES)
    p.add_argument("--radius", type=float, default=0.99)
    p.add_argument("--samples", type=int, default=720)
    p.add_argument("--A", type=float, default=None)
    _globals(p, True)
    return parser


def _emit(args, text: str) -> None:
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)


def _mark(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if sys.stdout.isatty() and "NO_COLOR" not in os.environ:
        return f"\033[{32 if ok else 31}m{word}\033[0m"
    return word


def _cmd_verify(args) -> int:
    ids = list(THEOREMS) if args.theorem == "all" else [args.theorem]
    reps = [verify_theorem(t, tolerance=args.tolerance, seed=args.seed) for t in ids]
    if args.json:
        doc = report.document("verify", [r.to_dict() for r in reps],
                              seed=args.seed, tolerance=args.tolerance)
        _emit(args, report.dumps(doc) + "\n")
    elif args.csv:
        _emit(args, report.reports_csv(reps))
    else:
        lines = []
        for r in reps:
            lines.append(f"Theorem {r.theorem} ({r.cls})")
            lines.append(f"  upper: claimed {r.claimed_upper:.12g}  closed form "
                         f"{r.closed_form_upper:.12g}  oracle {r.oracle_upper:.12g}")
            lower = "-" if r.claimed_lower is None else f"{r.claimed_lower:.12g}"
            lines.append(f"  lower: claimed {lower}  closed form "
                         f"{r.closed_form_lower:.12g}  oracle {r.oracle_lower:.12g}")
            for k, v in r.extremal_values.items():
                lines.append(f"  {k}: {v:.12g}")
            for k, ok in r.checks.items():
                lines.append(f"  [{_mark(ok)}] {k}")
            for d in r.discrepancies:
                lines.append(f"  [FLAG] {d.where}: {d.note}")
        _emit(args, "\n".join(lines) + "\n")
    if not all(r.passed for r in reps):
        return EXIT_FAIL
    if any(r.discrepancies for r in reps):
        return EXIT_FAIL if args.strict else EXIT_FLAGGED
    return EXIT_OK


def _cmd_search(args) -> int:
    cls = ClassId.parse(args.cls)
    g = args.grid
    if g < 32:
        raise ValueError(f"--grid must be at least 32, got {g}")
    res = search_class(cls, grid=(g, max(2, g // 2), g))
    body = {"class": cls.tag, "min": res.min, "max": res.max,
            "argmin": list(res.argmin.coeffs), "argmax": list(res.argmax.coeffs)}
    if args.json:
        _emit(args, report.dumps(report.document("search", body, grid=g)) + "\n")
    elif args.csv:
        _emit(args, "class,min,max\r\n"
              f"{cls.tag},{report._num(res.min)},{report._num(res.max)}\r\n")
    else:
        _emit(args, f"{cls.tag}: min {res.min:.15g} at (c1, c2) = {res.argmin.coeffs}\n"
                    f"{cls.tag}: max {res.max:.15g} at (c1, c2) = {res.argmax.coeffs}\n")
    return EXIT_OK


def _cmd_extremal(args) -> int:
    if args.order < 4:
        raise ValueError("--order must be at least 4")
    f = extremal(args.name, args.order, args.A)
    gam = inv_log_coeffs_series(f, 2)
    closed = inv_log_coeffs(f[2], f[3])
    body = {
        "name": args.name, "class": extremal_class(args.name).tag,
        "coefficients": list(f.coeffs),
        "gamma": log_coeffs_series(f, 2),
        "Gamma_series": gam,
        "Gamma_closed_form": [closed.gamma1, closed.gamma2],
        "moduli_diff": abs(gam[1]) - abs(gam[0]),
    }
    if args.json:
        _emit(args, report.dumps(report.document("extremal", body)) + "\n")
    elif args.csv:
        rows = ["n,re,im"] + [f"{n},{report._num(c.real)},{report._num(c.imag)}"
                              for n, c in enumerate(f.coeffs)]
        _emit(args, "\r\n".join(rows) + "\r\n")
    else:
        lines = [f"{args.name} ({body['class']}), order {args.order}"]
        lines += [f"  a_{n} = {c.real:.15g}" + (f" {c.imag:+.3g}i" if c.imag else "")
                  for n, c in enumerate(f.coeffs) if n >= 1]
        lines.append(f"  Gamma1 = {gam[0]:.15g}, Gamma2 = {gam[1]:.15g}")
        lines.append(f"  |Gamma2| - |Gamma1| = {body['moduli_diff']:.15g}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _write_figure(args, fig, default_stem: str) -> None:
    out = args.out if args.out is not None else Path(default_stem + ".svg")
    svg = out if out.suffix == ".svg" else out.with_suffix(".svg")
    svg.write_text(fig.to_svg())
    svg.with_suffix(".csv").write_text(fig.to_csv(), newline="")
    meta = {**fig.metadata, "svg": str(svg), "csv": str(svg.with_suffix(".csv"))}
    if args.json:
        sys.stdout.write(report.dumps(report.document("figure", meta)) + "\n")
    else:
        sys.stdout.write(f"wrote {svg} and {svg.with_suffix('.csv')}\n")


def _cmd_render_lune(args) -> int:
    fig = render_lune(args.samples)
    _write_figure(args, fig, "lune")
    return EXIT_OK if fig.metadata["ok"] else EXIT_FAIL


def _cmd_render_image(args) -> int:
    try:
        fig = render_image_domain(args.name, args.radius, args.samples, args.A)
    except QuadratureError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_FAIL
    _write_figure(args, fig, f"image_{args.name}")
    return EXIT_OK


COMMANDS = {
    "verify": _cmd_verify, "search": _cmd_search, "extremal": _cmd_extremal,
    "render-lune": _cmd_render_lune, "render-image": _cmd_render_image,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        sys.stderr.write(f"invlogcoef: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
