"""Stable JSON / CSV / text encodings for rationals, polynomials and reports.

Rationals are always strings (``"p/q"``, or ``"p"`` when ``q == 1``) so
that no value ever passes through a float.
"""

from __future__ import annotations

import csv
import io
import json
import re
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Union

from .identities import IdentityId, IdentityReport, SuiteReport
from .poly import BiPoly, UniPoly

__all__ = [
    "format_rational",
    "parse_rational",
    "to_jsonable",
    "from_jsonable",
    "dumps",
    "loads",
    "emit",
    "csv_text",
]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")

Payload = Union[Fraction, int, UniPoly, BiPoly, IdentityReport, SuiteReport]


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {s!r}")
    q = Fraction(s)
    if q.denominator == 0:  # pragma: no cover - Fraction already raises
        raise ValueError(f"zero denominator: {s!r}")
    return q


def _uni(p: UniPoly) -> dict:
    return {"var": p.var, "coeffs": [format_rational(c) for c in p.coeffs]}


def _bi(p: BiPoly) -> dict:
    return {
        "vars": list(BiPoly.VARS),
        "coeffs": [[format_rational(c) for c in row] for row in p.coeffs],
    }


def _report(r: IdentityReport) -> dict:
    return {
        "id": r.id.value,
        "m": r.m,
        "n": r.n,
        "holds": r.holds,
        "lhs": _bi(r.lhs),
        "rhs": _bi(r.rhs),
        "diff": _bi(r.diff),
    }


def to_jsonable(obj: Payload) -> Any:
    if isinstance(obj, SuiteReport):
        return {"all_hold": obj.all_hold, "reports": [_report(r) for r in obj.reports]}
    if isinstance(obj, IdentityReport):
        return _report(obj)
    if isinstance(obj, UniPoly):
        return _uni(obj)
    if isinstance(obj, BiPoly):
        return _bi(obj)
    if isinstance(obj, (int, Fraction)) and not isinstance(obj, bool):
        return format_rational(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _parse_bi(d: dict) -> BiPoly:
    if d.get("vars") != list(BiPoly.VARS):
        raise ValueError(f"unexpected bipoly vars {d.get('vars')!r}")
    return BiPoly([[parse_rational(c) for c in row] for row in d["coeffs"]])


def from_jsonable(data: Any) -> Payload:
    """Inverse of :func:`to_jsonable` for the single-payload shapes."""
    if isinstance(data, str):
        return parse_rational(data)
    if isinstance(data, dict):
        if "reports" in data:
            suite = SuiteReport(tuple(from_jsonable(r) for r in data["reports"]))
            if suite.all_hold != data["all_hold"]:
                raise ValueError("all_hold flag disagrees with reports")
            return suite
        if "id" in data:
            return IdentityReport(
                IdentityId(data["id"]),
                int(data["m"]),
                int(data["n"]),
                _parse_bi(data["lhs"]),
                _parse_bi(data["rhs"]),
                _parse_bi(data["diff"]),
                bool(data["holds"]),
            )
        if "vars" in data:
            return _parse_bi(data)
        if "var" in data:
            return UniPoly([parse_rational(c) for c in data["coeffs"]], data["var"])
    raise ValueError("unrecognized payload shape")


def dumps(obj: Any) -> str:
    """Compact JSON; plain dicts/lists are assumed already JSON-ready."""
    data = obj if isinstance(obj, (dict, list)) else to_jsonable(obj)
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def loads(text: str) -> Payload:
    return from_jsonable(json.loads(text))


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _report_rows(reports: Iterable[IdentityReport]) -> List[list]:
    return [
        [r.id.value, r.m, r.n, "true" if r.holds else "false", len(r.diff.terms())]
        for r in reports
    ]


def emit(obj: Payload, fmt: str = "text") -> str:
    """Serialize one payload; output always ends with a newline."""
    if fmt == "json":
        return dumps(obj) + "\n"
    if fmt == "csv":
        if isinstance(obj, SuiteReport):
            return csv_text(("id", "m", "n", "holds", "diff_terms"), _report_rows(obj.reports))
        if isinstance(obj, IdentityReport):
            return csv_text(("id", "m", "n", "holds", "diff_terms"), _report_rows([obj]))
        if isinstance(obj, UniPoly):
            return csv_text(("k", "coeff"), [[k, format_rational(c)] for k, c in enumerate(obj.coeffs)])
        if isinstance(obj, BiPoly):
            return csv_text(("i", "j", "coeff"), [[i, j, format_rational(c)] for i, j, c in obj.terms()])
        return csv_text(("value",), [[format_rational(obj)]])
    if fmt == "text":
        if isinstance(obj, SuiteReport):
            lines = [
                f"{r.id.value:<13} m={r.m:<3} n={r.n:<3} {'holds' if r.holds else 'FAILS'}"
                for r in obj.reports
            ]
            summary = ", ".join(f"{k}: {v}" for k, v in obj.counts.items())
            lines.append(
                f"{'all hold' if obj.all_hold else f'{len(obj.failures())} failing'}"
                f" ({len(obj.reports)} checks; {summary})"
            )
            return "\n".join(lines) + "\n"
        if isinstance(obj, IdentityReport):
            lines = [
                f"{obj.id.value} m={obj.m} n={obj.n}: {'holds' if obj.holds else 'FAILS'}",
                f"  lhs  = {obj.lhs}",
                f"  rhs  = {obj.rhs}",
                f"  diff = {obj.diff}",
            ]
            return "\n".join(lines) + "\n"
        if isinstance(obj, (UniPoly, BiPoly)):
            return f"{obj}\n"
        return format_rational(obj) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
