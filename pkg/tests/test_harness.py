import json
import math
from fractions import Fraction

import numpy as np
import pytest

from invlogcoef.classes import ClassId
from invlogcoef.harness import cli, report
from invlogcoef.harness.quadrature import QuadratureError, adaptive_gauss
from invlogcoef.harness.render import (evaluate_extremal, render_image_domain,
                                       render_lune)
from invlogcoef.harness.verify import THEOREMS, search_class, verify_theorem
from invlogcoef.psi import psi_minus_bound, psi_plus_bound


@pytest.fixture(scope="module")
def reports():
    return {t: verify_theorem(t) for t in THEOREMS}


def test_reports_pass_and_flag(reports):
    for t, r in reports.items():
        assert r.passed, (t, {k: v for k, v in r.checks.items() if not v})
        assert r.oracle_upper <= r.closed_form_upper + 1e-9
        assert r.oracle_lower >= r.closed_form_lower - 1e-9
    kinds = {t: {d.kind for d in r.discrepancies} for t, r in reports.items()}
    assert "extremal_generator" in kinds["1.1"]
    assert "schwarz_function" in kinds["1.3"]
    assert "extremal_constant" in kinds["1.4"]
    assert "scale_factor" in kinds["1.2"]


def test_report_values(reports):
    assert reports["1.1"].closed_form_upper == 0.5
    assert reports["1.3"].closed_form_lower == pytest.approx(-1 / math.sqrt(10), abs=1e-15)
    r = reports["1.4"]
    assert r.extremal_values["f6_A=4/7"] == pytest.approx(-3 / 28, abs=1e-12)
    assert r.extremal_values["f6"] == pytest.approx(-4 / 21, abs=1e-9)


def test_dual_path():
    for cls in ClassId:
        res = search_class(cls, grid=(48, 24, 48))
        s = float(cls.scale)
        assert abs(res.max - s * psi_plus_bound(cls.B)) < 1e-6
        assert abs(res.min + s * psi_minus_bound(cls.B)) < 1e-6


def test_json_is_deterministic(reports):
    doc = report.document("verify", [r.to_dict() for r in reports.values()], seed=0)
    again = report.document("verify", [verify_theorem(t).to_dict() for t in THEOREMS], seed=0)
    text = report.dumps(doc)
    assert text == report.dumps(again)
    parsed = json.loads(text)
    assert parsed["schema"] == report.SCHEMA and len(parsed["result"]) == 4


def test_dumps_types():
    text = report.dumps({"a": 1, "b": 0.1, "c": 1 + 2j, "d": Fraction(1, 3),
                         "e": np.float64(2.0), "f": [True, None], "g": float("nan")})
    assert json.loads(text) == {"a": 1, "b": 0.1, "c": [1.0, 2.0], "d": "1/3",
                                "e": 2.0, "f": [True, None], "g": None}
    with pytest.raises(TypeError):
        report.dumps(object())


def test_csv_report(reports):
    text = report.reports_csv(reports.values())
    lines = text.split("\r\n")
    assert lines[0].startswith("theorem,class") and len(lines) == 6


def test_quadrature():
    val, err = adaptive_gauss(lambda t: np.exp(t), 0.0, 1.0)
    assert abs(val - (math.e - 1)) < 1e-14
    vals, _ = adaptive_gauss(lambda t: np.array([1.0, 2.0])[:, None] * np.sqrt(t), 0.0, 1.0)
    np.testing.assert_allclose(vals, [2 / 3, 4 / 3], atol=1e-10)
    with pytest.raises(QuadratureError) as exc:
        adaptive_gauss(lambda t: 1 / (t - 0.5) ** 2, 0.0, 1.0, max_depth=5)
    assert exc.value.bad.all()


def test_render_lune():
    fig = render_lune(722)
    m = fig.metadata
    assert m["samples"] == 724 and m["ok"]
    assert m["max_boundary_residual"] < 1e-9
    assert max(m["mark_distance"].values()) < 1e-9
    lo, hi = m["right_lobe_real_extent"]
    assert abs(lo - (math.sqrt(2) - 1)) < 1e-12 and abs(hi - (math.sqrt(2) + 1)) < 1e-12
    assert fig.to_svg().count("<polygon") == 2
    assert fig.to_csv().count("\r\n") == 2 * 724 + 1
    with pytest.raises(ValueError):
        render_lune(10)


def test_extremal_evaluation_routes():
    z = 0.5 * np.exp(2j * np.pi * np.arange(32) / 32)
    assert evaluate_extremal("f1", 0.9) == pytest.approx(0.9 / 0.19)
    for name in ("f3", "f4", "f5", "f6"):
        quad = evaluate_extremal(name, z, method="quadrature")
        ser = evaluate_extremal(name, z, method="series")
        assert np.max(np.abs(quad - ser)) < 1e-8
    f3 = evaluate_extremal("f3", z, method="closed")
    assert np.max(np.abs(f3 - evaluate_extremal("f3", z, method="series"))) < 1e-12


def test_render_image_domain():
    fig = render_image_domain("f1", 0.9, 360)
    v = fig.curves[0]
    # odd map: the image of the circle is symmetric under w -> -w
    np.testing.assert_allclose(v[180:], -v[:180], atol=1e-12)
    fig = render_image_domain("f6", 0.99, 90)
    assert np.all(np.isfinite(fig.curves[0]))
    with pytest.raises(ValueError):
        render_image_domain("f3", 1.0)


def test_cli_exit_codes(tmp_path, capsys):
    assert cli.main(["verify", "--theorem", "1.1"]) == cli.EXIT_FLAGGED
    assert cli.main(["verify", "--theorem", "1.1", "--strict"]) == cli.EXIT_FAIL
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == cli.EXIT_USAGE
    assert cli.main(["search", "--class", "StarlikeLune", "--grid", "8"]) == cli.EXIT_USAGE
    capsys.readouterr()
    assert cli.main(["extremal", "--name", "f4", "--json"]) == cli.EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert out["result"]["moduli_diff"] == pytest.approx(-1 / math.sqrt(10), abs=1e-12)
    svg = tmp_path / "lune.svg"
    assert cli.main(["render-lune", "--out", str(svg)]) == cli.EXIT_OK
    assert svg.exists() and svg.with_suffix(".csv").exists()


def test_cli_json_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    cli.main(["verify", "--theorem", "1.3", "--json", "--out", str(a)])
    cli.main(["--json", "--out", str(b), "verify", "--theorem", "1.3"])
    assert a.read_bytes() == b.read_bytes()
