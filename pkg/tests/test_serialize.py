import json
from fractions import Fraction as F

import pytest
from hypothesis import given

from bernid.identities import verify_lemma2, verify_range
from bernid.poly import BiPoly, UniPoly
from bernid.sequences import RationalSeq, bernoulli_number, bernoulli_poly
from bernid.serialize import dumps, emit, format_rational, loads, parse_rational

from conftest import bipolys, rationals, unipolys


def test_rational_encoding():
    assert dumps(bernoulli_number(12)) == '"-691/2730"'
    assert format_rational(F(0)) == "0"
    assert format_rational(F(-4, 2)) == "-2"
    assert parse_rational("-691/2730") == F(-691, 2730)


@pytest.mark.parametrize("bad", ["1.5", "1e3", "", "1/-2", "a/b", 3])
def test_parse_rational_rejects_non_literals(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_polynomial_encoding():
    assert dumps(UniPoly()) == '{"var":"x","coeffs":[]}'
    assert dumps(bernoulli_poly(2)) == '{"var":"x","coeffs":["1/6","-1","1"]}'
    assert dumps(BiPoly()) == '{"vars":["x","y"],"coeffs":[]}'
    assert dumps(BiPoly([[0, 1], [F(1, 2), 0]])) == '{"vars":["x","y"],"coeffs":[["0","1"],["1/2","0"]]}'


def test_report_schema():
    data = json.loads(dumps(verify_range({"eq1"}, 1, 1)))
    assert list(data) == ["all_hold", "reports"]
    assert list(data["reports"][0]) == ["id", "m", "n", "holds", "lhs", "rhs", "diff"]
    assert data["reports"][0]["diff"] == {"vars": ["x", "y"], "coeffs": []}


@given(rationals)
def test_rational_round_trip(q):
    s = dumps(q)
    assert loads(s) == q and dumps(loads(s)) == s


@given(unipolys())
def test_unipoly_round_trip(p):
    s = dumps(p)
    assert loads(s) == p and dumps(loads(s)) == s


@given(bipolys())
def test_bipoly_round_trip(p):
    s = dumps(p)
    assert loads(s) == p and dumps(loads(s)) == s


def test_suite_round_trip_is_byte_identical():
    suite = verify_range({"eq3", "eq5_verbatim", "eq11"}, 2, 2)
    s = dumps(suite)
    back = loads(s)
    assert back == suite
    assert dumps(back) == s
    r = verify_lemma2(RationalSeq.random(3, 6), 2, 2)
    assert dumps(loads(dumps(r))) == dumps(r)


def test_all_hold_mismatch_rejected():
    data = json.loads(dumps(verify_range({"eq1"}, 1, 1)))
    data["all_hold"] = False
    with pytest.raises(ValueError):
        loads(json.dumps(data))


def test_csv_and_text():
    assert emit(bernoulli_poly(1), "csv") == "k,coeff\n0,-1/2\n1,1\n"
    assert emit(F(-1, 6), "csv") == "value\n-1/6\n"
    assert emit(bernoulli_poly(2), "text") == "x^2 - x + 1/6\n"
    txt = emit(verify_range({"eq1"}, 1, 1), "text")
    assert txt.splitlines()[-1].startswith("all hold (4 checks")
    assert "\r" not in emit(verify_range({"eq1"}, 1, 1), "csv")
    with pytest.raises(ValueError):
        emit(F(1), "xml")
