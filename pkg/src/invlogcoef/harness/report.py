"""Deterministic JSON and CSV serialization of reports.

Floats are written with 17 significant digits, complex numbers as
``[re, im]``; key order is preserved so equal inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from numbers import Complex, Integral, Real

import numpy as np

SCHEMA = 1


def _num(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return "null"
    s = format(x, ".17g")
    if s.lstrip("-").isdigit():
        s += ".0"
    return s


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, Integral):
        return str(int(obj))
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if isinstance(obj, Real):
        return _num(float(obj))
    if isinstance(obj, Complex):
        c = complex(obj)
        return f"[{_num(c.real)}, {_num(c.imag)}]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        if len(obj) == 0:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def document(kind: str, body, **meta) -> dict:
    return {"schema": SCHEMA, "kind": kind, **meta, "result": body}


def reports_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["theorem", "class", "claimed_upper", "closed_form_upper",
                "oracle_upper", "claimed_lower", "closed_form_lower",
                "oracle_lower", "pass", "discrepancies"])
    for r in reports:
        w.writerow([r.theorem, r.cls, _num(r.claimed_upper), _num(r.closed_form_upper),
                    _num(r.oracle_upper),
                    "" if r.claimed_lower is None else _num(r.claimed_lower),
                    _num(r.closed_form_lower), _num(r.oracle_lower),
                    int(r.passed), len(r.discrepancies)])
    return buf.getvalue()
