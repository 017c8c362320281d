"""Catalog of symmetric Bernoulli/Euler identities and their exact verifier.

Each catalog entry builds both sides of one identity for given ``(m, n)``
as :class:`~bernid.poly.BiPoly` values in ``x`` and ``y``, with the third
variable eliminated through ``z = 1 - x - y``.  Identities in a single
variable ``t`` put ``t`` in the ``x`` slot; scalar identities return
constants.  An identity is certified for ``(m, n)`` when ``lhs - rhs``
reduces to the zero polynomial.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Dict, Iterable, List, Mapping, Tuple

from .poly import ARG_X, ARG_X_PLUS_Y, ARG_Y, ARG_Z, AffineArg, BiPoly, UniPoly, uni_to_bi
from .sequences import (
    RationalSeq,
    bernoulli_number,
    bernoulli_poly,
    dual_transform,
    euler_number,
    euler_poly,
)

__all__ = [
    "IdentityId",
    "DomainError",
    "IdentityReport",
    "SuiteReport",
    "CATALOG",
    "CERTIFIED_IDS",
    "domain_of",
    "woodcock_number",
    "woodcock_poly_A",
    "woodcock_poly_C",
    "identity_sides",
    "verify_identity",
    "verify_lemma2",
    "verify_range",
]


class IdentityId(str, enum.Enum):
    THM0_B1 = "thm0_b1"
    THM0_B2 = "thm0_b2"
    THM0_E1 = "thm0_e1"
    THM0_E2 = "thm0_e2"
    EQ1 = "eq1"
    EQ1_PRIME = "eq1_prime"
    EQ2 = "eq2"
    EQ3 = "eq3"
    EQ4 = "eq4"
    EQ5 = "eq5"
    EQ5_VERBATIM = "eq5_verbatim"
    EQ6 = "eq6"
    EQ7_A = "eq7_A"
    EQ7_C = "eq7_C"
    WOODCOCK = "woodcock"
    EQ10 = "eq10"
    EQ11 = "eq11"
    LEMMA2 = "lemma2"

    def __str__(self) -> str:
        return self.value


class DomainError(ValueError):
    """A parameter lies outside an identity's domain."""


_MIN_ONE = {
    IdentityId.EQ1_PRIME,
    IdentityId.EQ4,
    IdentityId.EQ5,
    IdentityId.EQ5_VERBATIM,
    IdentityId.EQ6,
    IdentityId.EQ7_A,
    IdentityId.EQ7_C,
    IdentityId.WOODCOCK,
    IdentityId.EQ10,
    IdentityId.EQ11,
}


def domain_of(ident: IdentityId) -> Tuple[int, int]:
    """Smallest admissible ``(m, n)``."""
    ident = IdentityId(ident)
    return (1, 1) if ident in _MIN_ONE else (0, 0)


def _check_domain(ident: IdentityId, m: int, n: int) -> None:
    m0, n0 = domain_of(ident)
    for name, v, lo in (("m", m, m0), ("n", n, n0)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise DomainError(f"{ident.value}: {name} must be an integer, got {v!r}")
        if v < lo:
            raise DomainError(f"{ident.value}: requires {name} >= {lo}, got {name}={v}")


# -- building blocks ---------------------------------------------------------


@lru_cache(maxsize=None)
def _bern_at(k: int, arg: AffineArg) -> BiPoly:
    return uni_to_bi(bernoulli_poly(k), arg)


@lru_cache(maxsize=None)
def _euler_at(k: int, arg: AffineArg) -> BiPoly:
    return uni_to_bi(euler_poly(k), arg)


def _xpow(k: int) -> BiPoly:
    return BiPoly.monomial(k, 0)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _total(terms: Iterable[BiPoly]) -> BiPoly:
    acc = BiPoly()
    for t in terms:
        acc = acc + t
    return acc


B = _bern_at
E = _euler_at
X, Y, Z = ARG_X, ARG_Y, ARG_Z


# -- named sums and polynomials ----------------------------------------------


def woodcock_number(m: int, n: int) -> Fraction:
    """``A_{m,n} = (1/n) sum_{k=1}^{n} C(n,k) (-1)^k B_{m+k} B_{n-k}``."""
    if m < 0:
        raise DomainError(f"woodcock_number: requires m >= 0, got m={m}")
    if n < 1:
        raise DomainError(f"woodcock_number: requires n >= 1, got n={n}")
    s = sum(
        comb(n, k) * _sign(k) * bernoulli_number(m + k) * bernoulli_number(n - k)
        for k in range(1, n + 1)
    )
    return Fraction(s) / n


def woodcock_poly_A(m: int, n: int) -> UniPoly:
    """``(1/n) sum_{k=0}^{n} C(n,k)(-1)^k B_{m+k}(t) B_{n-k}(2t) - B_m(t) B_n(t)/n``."""
    if m < 0:
        raise DomainError(f"woodcock_poly_A: requires m >= 0, got m={m}")
    if n < 1:
        raise DomainError(f"woodcock_poly_A: requires n >= 1, got n={n}")
    acc = UniPoly(var="t")
    for k in range(n + 1):
        acc = acc + comb(n, k) * _sign(k) * (
            bernoulli_poly(m + k, "t")
            * bernoulli_poly(n - k, "t").compose_affine(2, 0)
        )
    return (acc - bernoulli_poly(m, "t") * bernoulli_poly(n, "t")) / n


def woodcock_poly_C(m: int, n: int) -> UniPoly:
    """``sum_{k=0}^{n} C(n,k)(-1)^k B_{m+k}(t) E_{n-k}(2t) - (n/2) E_m(t) E_{n-1}(t)``."""
    if m < 0:
        raise DomainError(f"woodcock_poly_C: requires m >= 0, got m={m}")
    if n < 1:
        raise DomainError(f"woodcock_poly_C: requires n >= 1, got n={n}")
    acc = UniPoly(var="t")
    for k in range(n + 1):
        acc = acc + comb(n, k) * _sign(k) * (
            bernoulli_poly(m + k, "t") * euler_poly(n - k, "t").compose_affine(2, 0)
        )
    return acc - Fraction(n, 2) * euler_poly(m, "t") * euler_poly(n - 1, "t")


# -- catalog entries ---------------------------------------------------------

Sides = Tuple[BiPoly, BiPoly]


def _thm0_first(m: int, n: int, P) -> Sides:
    lhs = _sign(m) * _total(
        comb(m, k) * _xpow(m - k) * P(n + k + 1, Y) / (n + k + 1) for k in range(m + 1)
    ) + _sign(n) * _total(
        comb(n, k) * _xpow(n - k) * P(m + k + 1, Z) / (m + k + 1) for k in range(n + 1)
    )
    rhs = BiPoly.monomial(m + n + 1, 0, _sign(m + n + 1)) / (
        (m + n + 1) * comb(m + n, n)
    )
    return lhs, rhs


def _thm0_second(m: int, n: int, P) -> Sides:
    lhs = _sign(m) * _total(
        comb(m, k) * _xpow(m - k) * P(n + k, Y) for k in range(m + 1)
    )
    rhs = _sign(n) * _total(
        comb(n, k) * _xpow(n - k) * P(m + k, Z) for k in range(n + 1)
    )
    return lhs, rhs


def _thm0_b1(m, n):
    return _thm0_first(m, n, B)


def _thm0_e1(m, n):
    return _thm0_first(m, n, E)


def _thm0_b2(m, n):
    return _thm0_second(m, n, B)


def _thm0_e2(m, n):
    return _thm0_second(m, n, E)


def _eq1(m, n):
    s = m + n
    lhs = _sign(m) * _total(
        comb(m, k) * (B(m - k + 1, X) / (m - k + 1)) * (B(n + k + 1, Y) / (n + k + 1))
        for k in range(m + 1)
    ) + _sign(n) * _total(
        comb(n, k) * (B(n - k + 1, X) / (n - k + 1)) * (B(m + k + 1, Z) / (m + k + 1))
        for k in range(n + 1)
    )
    rhs = (
        Fraction(_sign(s + 1), (s + 1) * comb(s, n)) * B(s + 2, X) / (s + 2)
        - (B(m + 1, Z) / (m + 1)) * (B(n + 1, Y) / (n + 1))
        + Fraction(_sign(m + 1), m + 1) * B(s + 2, Y) / (s + 2)
        + Fraction(_sign(n + 1), n + 1) * B(s + 2, Z) / (s + 2)
    )
    return lhs, rhs


def _eq1_prime(m, n):
    lhs = Fraction(_sign(m), m) * _total(
        comb(m, k) * B(m - k, X) * B(n + k, Y) / (n + k) for k in range(m + 1)
    ) + Fraction(_sign(n), n) * _total(
        comb(n, k) * B(n - k, X) * B(m + k, Z) / (m + k) for k in range(n + 1)
    )
    rhs = Fraction(
        _sign(m + n) * factorial(m - 1) * factorial(n - 1), factorial(m + n)
    ) * B(m + n, X) + (B(m, Z) / m) * (B(n, Y) / n)
    return lhs, rhs


def _eq2(m, n):
    s = m + n
    lhs = _sign(m) * _total(
        comb(m, k) * E(m - k, X) * B(n + k + 1, Y) / (n + k + 1) for k in range(m + 1)
    ) + _sign(n) * _total(
        comb(n, k) * E(n - k, X) * B(m + k + 1, Z) / (m + k + 1) for k in range(n + 1)
    )
    rhs = Fraction(_sign(s + 1), (s + 1) * comb(s, n)) * E(s + 1, X) - E(m, Z) * E(
        n, Y
    ) / 2
    return lhs, rhs


def _eq3(m, n):
    s = m + n
    lhs = Fraction(_sign(m), 2) * _total(
        comb(m, k) * E(m - k, X) * E(n + k + 1, Y) / (n + k + 1) for k in range(m + 1)
    ) - _sign(n) * _total(
        comb(n, k) * (B(n - k + 1, X) / (n - k + 1)) * (E(m + k + 1, Z) / (m + k + 1))
        for k in range(n + 1)
    )
    rhs = (
        Fraction(_sign(s), (s + 1) * comb(s, n)) * B(s + 2, X) / (s + 2)
        + Fraction(_sign(n), n + 1) * E(s + 2, Z) / (s + 2)
        - Fraction(1, n + 1)
        * _total(
            Fraction(comb(m, k), comb(n + k + 1, k))
            * E(m - k, Z)
            * B(n + k + 2, Y)
            / (n + k + 2)
            for k in range(m + 1)
        )
    )
    return lhs, rhs


def _eq4(m, n):
    lhs = Fraction(_sign(m), m) * _total(
        comb(m, k) * B(m - k, X) * B(n - 1 + k, Y) for k in range(m + 1)
    ) - B(m, Z) * B(n - 1, Y) / m
    rhs = Fraction(_sign(n), n) * _total(
        comb(n, k) * B(n - k, X) * B(m - 1 + k, Z) for k in range(n + 1)
    ) - B(n, Y) * B(m - 1, Z) / n
    return lhs, rhs


def _eq5_sums(m, n) -> Sides:
    left = _sign(m) * _total(
        comb(m, k) * E(m - k, X) * B(n + k, Y) for k in range(m + 1)
    )
    right = _sign(n) * _total(
        comb(n, k) * E(n - k, X) * B(m + k, Z) for k in range(n + 1)
    )
    return left, right


def _eq5(m, n):
    # Correction term on the right is E_m(z) E_{n-1}(y), as obtained by
    # differentiating eq2 in y; the displayed form swaps the arguments.
    left, right = _eq5_sums(m, n)
    lhs = left - Fraction(m, 2) * E(m - 1, Z) * E(n, Y)
    rhs = right - Fraction(n, 2) * E(m, Z) * E(n - 1, Y)
    return lhs, rhs


def _eq5_verbatim(m, n):
    left, right = _eq5_sums(m, n)
    lhs = left - Fraction(m, 2) * E(m - 1, Z) * E(n, Y)
    rhs = right - Fraction(n, 2) * E(n - 1, Z) * E(m, Y)
    return lhs, rhs


def _eq6(m, n):
    lhs = Fraction(_sign(m), 2) * _total(
        comb(m, k) * E(m - k, X) * E(n - 1 + k, Y) for k in range(m + 1)
    )
    rhs = Fraction(_sign(n), n) * _total(
        comb(n, k) * B(n - k, X) * E(m + k, Z) for k in range(n + 1)
    ) - B(n, Y) * E(m, Z) / n
    return lhs, rhs


def _in_t(p: UniPoly) -> BiPoly:
    return BiPoly.from_uni(p, "x")


def _eq7_A(m, n):
    return _in_t(woodcock_poly_A(m - 1, n)), _in_t(woodcock_poly_A(n - 1, m))


def _eq7_C(m, n):
    return _in_t(woodcock_poly_C(m, n)), _in_t(woodcock_poly_C(n, m))


def _woodcock(m, n):
    return (
        BiPoly.constant(woodcock_number(m - 1, n)),
        BiPoly.constant(woodcock_number(n - 1, m)),
    )


def _bridge_term(j: int) -> Fraction:
    """``(1 - 2^j) B_j``, the number behind E_{j-1}(0)."""
    return (1 - 2**j) * bernoulli_number(j)


def _eq10(m, n):
    lhs = Fraction(1, m) * sum(
        comb(m, k)
        * _sign(k)
        * _bridge_term(n + k)
        / (n + k)
        * _bridge_term(m - k)
        for k in range(m + 1)
    )
    rhs = Fraction(1, n) * sum(
        comb(n, k)
        * _sign(k)
        * _bridge_term(m + k)
        / (m + k)
        * bernoulli_number(n - k)
        for k in range(1, n + 1)
    )
    return BiPoly.constant(lhs), BiPoly.constant(rhs)


def _eq11(m, n):
    lhs = sum(
        comb(m, k) * euler_number(m - k) * euler_number(n - 1 + k)
        for k in range(m + 1)
    )
    rhs = Fraction(2 ** (m + 1), n) * sum(
        comb(n, k)
        * (2**n - 2 ** (k + 1))
        * bernoulli_number(n - k)
        * _bridge_term(m + k + 1)
        / (m + k + 1)
        for k in range(1, n + 1)
    )
    return BiPoly.constant(lhs), BiPoly.constant(rhs)


CATALOG: Mapping[IdentityId, Callable[[int, int], Sides]] = {
    IdentityId.THM0_B1: _thm0_b1,
    IdentityId.THM0_B2: _thm0_b2,
    IdentityId.THM0_E1: _thm0_e1,
    IdentityId.THM0_E2: _thm0_e2,
    IdentityId.EQ1: _eq1,
    IdentityId.EQ1_PRIME: _eq1_prime,
    IdentityId.EQ2: _eq2,
    IdentityId.EQ3: _eq3,
    IdentityId.EQ4: _eq4,
    IdentityId.EQ5: _eq5,
    IdentityId.EQ5_VERBATIM: _eq5_verbatim,
    IdentityId.EQ6: _eq6,
    IdentityId.EQ7_A: _eq7_A,
    IdentityId.EQ7_C: _eq7_C,
    IdentityId.WOODCOCK: _woodcock,
    IdentityId.EQ10: _eq10,
    IdentityId.EQ11: _eq11,
}

# Every catalog entry known to hold for all admissible (m, n).
CERTIFIED_IDS: Tuple[IdentityId, ...] = tuple(
    i for i in CATALOG if i is not IdentityId.EQ5_VERBATIM
)


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    id: IdentityId
    m: int
    n: int
    lhs: BiPoly
    rhs: BiPoly
    diff: BiPoly
    holds: bool

    @classmethod
    def from_sides(cls, ident, m: int, n: int, lhs: BiPoly, rhs: BiPoly) -> "IdentityReport":
        diff = lhs - rhs
        return cls(IdentityId(ident), m, n, lhs, rhs, diff, diff.is_zero())

    def is_consistent(self) -> bool:
        """Structural recheck of ``diff == lhs - rhs`` and ``holds``."""
        return (
            self.lhs - self.rhs == self.diff
            and self.holds == self.diff.is_zero()
            and self.holds == (self.lhs == self.rhs)
        )

    @property
    def sort_key(self) -> Tuple[str, int, int]:
        return (self.id.value, self.m, self.n)


@dataclass(frozen=True)
class SuiteReport:
    reports: Tuple[IdentityReport, ...]
    all_hold: bool = field(init=False)
    counts: Dict[str, int] = field(init=False, compare=False)

    def __post_init__(self):
        ordered = tuple(sorted(self.reports, key=lambda r: r.sort_key))
        object.__setattr__(self, "reports", ordered)
        object.__setattr__(self, "all_hold", all(r.holds for r in ordered))
        counts: Dict[str, int] = {}
        for r in ordered:
            counts[r.id.value] = counts.get(r.id.value, 0) + 1
        object.__setattr__(self, "counts", counts)

    def failures(self) -> List[IdentityReport]:
        return [r for r in self.reports if not r.holds]


def identity_sides(ident, m: int, n: int) -> Sides:
    """Both sides of catalog identity ``ident`` at ``(m, n)``."""
    try:
        ident = IdentityId(ident)
    except ValueError:
        raise DomainError(f"unknown identity {ident!r}") from None
    if ident not in CATALOG:
        raise DomainError(f"{ident.value} is not a catalog identity")
    _check_domain(ident, m, n)
    return CATALOG[ident](m, n)


def verify_identity(ident, m: int, n: int) -> IdentityReport:
    lhs, rhs = identity_sides(ident, m, n)
    return IdentityReport.from_sides(ident, m, n, lhs, rhs)


def verify_lemma2(seq: RationalSeq, m: int, n: int) -> IdentityReport:
    """Check the two-variable dual-transform identity for ``seq`` at ``(m, n)``.

    With ``A_l`` the dual transform of ``seq``::

        sum_{k=0}^{n} C(n,k) x^(m+k+1)/(m+k+1) A_{n-k}(y)
            + (-1)^m A_{m+n+1}(y) / ((m+n+1) C(m+n, n))
        = sum_{k=0}^{m} C(m,k)/C(n+k,k) (-1)^k x^(m-k) A_{n+k+1}(x+y)/(n+k+1)
    """
    _check_domain(IdentityId.LEMMA2, m, n)
    if not isinstance(seq, RationalSeq):
        seq = RationalSeq(seq)
    need = m + n + 2
    if len(seq) < need:
        raise IndexError(f"lemma2 at (m={m}, n={n}) needs {need} entries, got {len(seq)}")
    A = [dual_transform(seq, l, "x") for l in range(need)]
    s = m + n
    lhs = _total(
        comb(n, k) * _xpow(m + k + 1) * uni_to_bi(A[n - k], ARG_Y) / (m + k + 1)
        for k in range(n + 1)
    ) + Fraction(_sign(m), (s + 1) * comb(s, n)) * uni_to_bi(A[s + 1], ARG_Y)
    rhs = _total(
        Fraction(comb(m, k) * _sign(k), comb(n + k, k) * (n + k + 1))
        * _xpow(m - k)
        * uni_to_bi(A[n + k + 1], ARG_X_PLUS_Y)
        for k in range(m + 1)
    )
    return IdentityReport.from_sides(IdentityId.LEMMA2, m, n, lhs, rhs)


def _grid(ident: IdentityId, m_max: int, n_max: int) -> List[Tuple[int, int]]:
    m0, n0 = domain_of(ident)
    return [(m, n) for m in range(m0, m_max + 1) for n in range(n0, n_max + 1)]


def _verify_task(task: Tuple[str, int, int]) -> IdentityReport:
    return verify_identity(*task)


def verify_range(
    ids: Iterable, m_max: int, n_max: int, jobs: int = 1
) -> SuiteReport:
    """Verify each identity over its domain clipped to ``[0..m_max] x [0..n_max]``.

    ``jobs > 1`` evaluates grid points in worker processes; the resulting
    report is identical to a sequential run.
    """
    ids = sorted({IdentityId(i) for i in ids}, key=lambda i: i.value)
    if not ids:
        raise ValueError("verify_range needs at least one identity")
    if m_max < 1 or n_max < 1:
        raise DomainError(f"m_max and n_max must be >= 1, got {m_max}, {n_max}")
    missing = [i.value for i in ids if i not in CATALOG]
    if missing:
        raise DomainError(f"not catalog identities: {', '.join(missing)}")
    tasks = [(i.value, m, n) for i in ids for m, n in _grid(i, m_max, n_max)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_task, tasks, chunksize=8))
    else:
        reports = [_verify_task(t) for t in tasks]
    return SuiteReport(tuple(reports))
