"""Exit criteria for the package.  Every criterion is exact equality of
canonical forms; each test prints one PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v``.
"""

import io
import json
import random
import time
from fractions import Fraction as F

import pytest

from bernid import cli
from bernid.identities import (
    IdentityId,
    verify_lemma2,
    verify_range,
    woodcock_number,
    woodcock_poly_A,
)
from bernid.poly import (
    ARG_X,
    ARG_X_PLUS_Y,
    BiPoly,
    UniPoly,
    delta,
    delta_star,
    invert_delta,
    invert_delta_star,
    uni_to_bi,
)
from bernid.sequences import (
    RationalSeq,
    bernoulli_number,
    bernoulli_poly,
    dual_transform,
    euler_number,
    euler_poly,
)
from bernid.serialize import dumps, loads

import oracles

_START = time.perf_counter()


@pytest.fixture
def gate(capsys):
    def record(name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {name}" + (f" ({detail})" if detail else ""))
        assert ok, name

    return record


def _grid_ok(ids, lo, hi):
    suite = verify_range(ids, hi, hi)
    reports = [r for r in suite.reports if r.m >= lo and r.n >= lo]
    bad = [(r.id.value, r.m, r.n) for r in reports if not r.holds or not r.diff.is_zero()]
    return reports, bad


def test_theorem0_all_variants(gate):
    t0 = time.perf_counter()
    ids = ["thm0_b1", "thm0_b2", "thm0_e1", "thm0_e2"]
    reports, bad = _grid_ok(ids, 0, 8)
    dt = time.perf_counter() - t0
    gate(
        "Theorem 0, four variants, 0<=m,n<=8",
        len(reports) == 324 and not bad and dt < 10,
        f"{len(reports)} checks, {len(bad)} failing, {dt:.2f}s",
    )


def test_theorem1(gate):
    reports, bad = _grid_ok(["eq1", "eq2", "eq3"], 0, 8)
    reports2, bad2 = _grid_ok(["eq1_prime"], 1, 8)
    gate(
        "Theorem 1: eq1, eq2, eq3 on 0..8; eq1_prime on 1..8",
        len(reports) == 243 and len(reports2) == 64 and not bad and not bad2,
        f"{len(reports) + len(reports2)} checks, {len(bad) + len(bad2)} failing",
    )


def test_corollary1(gate):
    reports, bad = _grid_ok(["eq4", "eq5", "eq6"], 1, 8)
    gate(
        "Corollary 1: eq4, eq5, eq6 on 1..8",
        len(reports) == 192 and not bad,
        f"{len(reports)} checks, failing: {bad[:5]}",
    )


def test_corollary2_and_woodcock(gate):
    reports, bad = _grid_ok(["eq7_A", "eq7_C"], 1, 12)
    wsym = [
        (m, n)
        for m in range(1, 21)
        for n in range(1, 21)
        if woodcock_number(m - 1, n) != woodcock_number(n - 1, m)
    ]
    wpoly = [
        (m, n)
        for m in range(11)
        for n in range(1, 11)
        if woodcock_poly_A(m, n)(0) != woodcock_number(m, n)
    ]
    gate(
        "Corollary 2 / Woodcock: eq7_A, eq7_C on 1..12; number symmetry on 1..20; A_{m,n}(0)",
        len(reports) == 288 and not bad and not wsym and not wpoly,
        f"{len(reports) + 400 + 110} checks",
    )


def test_corollaries3_4(gate):
    reports, bad = _grid_ok(["eq10", "eq11"], 1, 12)
    gate("Corollaries 3-4: eq10, eq11 on 1..12", len(reports) == 288 and not bad, f"{len(reports)} checks")


def test_lemma2(gate):
    bad = []
    count = 0
    for seed in range(5):
        seq = RationalSeq.random(seed, 10)
        for m in range(9):
            for n in range(9 - m):
                count += 1
                if not verify_lemma2(seq, m, n).holds:
                    bad.append((seed, m, n))
    signed = RationalSeq.from_function(lambda k: (-1) ** k * bernoulli_number(k), 11)
    transform_ok = all(dual_transform(signed, l) == bernoulli_poly(l) for l in range(11))
    signed_ok = all(verify_lemma2(signed, m, n).holds for m in range(9) for n in range(9 - m))
    gate(
        "Lemma 2: 5 seeded sequences, m+n<=8; signed Bernoulli transform l<=10",
        not bad and transform_ok and signed_ok,
        f"{count} random checks",
    )


def test_special_sequence_invariants(gate):
    half = F(1, 2)
    y = BiPoly.monomial(0, 1)
    failures = []
    for n in range(21):
        s = (-1) ** n
        if bernoulli_poly(n).compose_affine(-1, 1) != s * bernoulli_poly(n):
            failures.append(("reflect B", n))
        if euler_poly(n).compose_affine(-1, 1) != s * euler_poly(n):
            failures.append(("reflect E", n))
        if n and delta(bernoulli_poly(n)) != n * UniPoly.monomial(n - 1):
            failures.append(("delta B", n))
        if delta_star(euler_poly(n)) != UniPoly.monomial(n, 2):
            failures.append(("delta* E", n))
        if n and bernoulli_poly(n).derivative() != n * bernoulli_poly(n - 1):
            failures.append(("B'", n))
        if n and euler_poly(n).derivative() != n * euler_poly(n - 1):
            failures.append(("E'", n))
    for n in range(13):
        for P in (bernoulli_poly, euler_poly):
            rhs = BiPoly()
            for k in range(n + 1):
                rhs = rhs + oracles.pascal_binomial(n, k) * uni_to_bi(P(k), ARG_X) * y ** (n - k)
            if uni_to_bi(P(n), ARG_X_PLUS_Y) != rhs:
                failures.append(("addition", P.__name__, n))
    for n in range(31):
        if bernoulli_poly(n)(half) != (F(2) ** (1 - n) - 1) * bernoulli_number(n):
            failures.append(("half", n))
    for l in range(16):
        b = bernoulli_poly(l + 1)
        if euler_poly(l) != F(2, l + 1) * (b - 2 ** (l + 1) * b.compose_affine(half, 0)):
            failures.append(("bridge", l))
    for l in range(21):
        e = euler_poly(l)
        target = 2 * (1 - 2 ** (l + 1)) * bernoulli_number(l + 1) / (l + 1)
        if not ((-1) ** l * e(1) == e(0) == target):
            failures.append(("boundary", l))
    gate("Special-sequence invariants", not failures, f"failures: {failures[:5]}")


def _random_poly(rng, max_degree=8):
    d = rng.randint(-1, max_degree)
    return UniPoly([F(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(d + 1)])


def test_operator_calculus(gate):
    rng = random.Random(20040820)
    bad = 0
    for _ in range(100):
        p, q = _random_poly(rng), _random_poly(rng)
        p1, q1 = p.compose_affine(1, 1), q.compose_affine(1, 1)
        ok = (
            delta(p * q) == p1 * delta(q) + delta(p) * q
            and delta_star(p * q) == delta(p) * q1 + p * delta_star(q)
            and delta_star(p * q) == p1 * delta_star(q) - delta(p) * q
        )
        bad += not ok
    trips = 0
    for _ in range(100):
        r = _random_poly(rng)
        p = invert_delta(r)
        ok = (
            delta(p) == r
            and p(0) == 0
            and delta_star(invert_delta_star(r)) == r
            and invert_delta_star(delta_star(r)) == r
        )
        trips += not ok
    euler_ok = all(invert_delta_star(UniPoly.monomial(n, 2)) == euler_poly(n) for n in range(16))
    gate(
        "Operator calculus: product rules, inverse round trips, Euler via inverse sum",
        bad == 0 and trips == 0 and euler_ok,
        f"{bad} product-rule and {trips} round-trip failures",
    )


def test_golden_values(gate):
    ob = oracles.bernoulli_numbers(12)
    oe = oracles.euler_numbers(4)
    e3 = oracles.euler_poly_coeffs(3)
    oracle_ok = (
        ob[12] == F(-691, 2730) and ob[1] == F(-1, 2) and ob[3] == 0
        and oe[2] == -1 and oe[4] == 5 and e3 == [F(1, 4), 0, F(-3, 2), 1]
    )
    lib_ok = (
        bernoulli_number(12) == ob[12]
        and bernoulli_number(1) == ob[1]
        and bernoulli_number(3) == ob[3]
        and euler_number(2) == oe[2]
        and euler_number(4) == oe[4]
        and list(euler_poly(3).coeffs) == e3
    )
    gate("Golden values against independent series oracle", oracle_ok and lib_ok)


def test_cli_and_total_runtime(gate):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(
        ["verify", "--identity", "all", "--m-max", "6", "--n-max", "6", "--format", "json"],
        stdout=out,
        stderr=err,
    )
    text = out.getvalue().rstrip("\n")
    round_trip = dumps(loads(text)) == text
    data = json.loads(text)
    elapsed = time.perf_counter() - _START
    gate(
        "CLI verify --identity all (6x6) exits 0, JSON round-trips; suite < 2 min",
        code == 0 and data["all_hold"] and round_trip and elapsed < 120,
        f"{len(data['reports'])} reports, acceptance elapsed {elapsed:.1f}s",
    )
