"""Bernoulli and Euler numbers and polynomials, and the alternating
binomial (dual) transform of a rational sequence.

Everything is produced by finite recurrences:

* ``sum_{k=0}^{n} C(n+1, k) B_k = 0`` with ``B_0 = 1``;
* ``B_n(x) = sum_k C(n, k) B_k x^(n-k)``;
* ``E_n(x) = x^n - 1/2 sum_{k<n} C(n, k) E_k(x)``, which is the unique
  polynomial with ``E_n(x+1) + E_n(x) = 2 x^n``.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple

from .poly import UniPoly, _check_degree

__all__ = [
    "RationalSeq",
    "SequenceCache",
    "default_cache",
    "bernoulli_number",
    "bernoulli_poly",
    "euler_poly",
    "euler_number",
    "dual_transform",
]


class SequenceCache:
    """Append-only tables of Bernoulli numbers and Bernoulli/Euler polynomials.

    A miss fills every missing prefix entry.  Growth is guarded by a lock so
    a single instance can be shared between threads.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._bernoulli_numbers: List[Fraction] = [Fraction(1)]
        self._bernoulli_polys: List[UniPoly] = []
        self._euler_polys: List[UniPoly] = []

    @property
    def bernoulli_numbers(self) -> Tuple[Fraction, ...]:
        return tuple(self._bernoulli_numbers)

    @property
    def euler_polys(self) -> Tuple[UniPoly, ...]:
        return tuple(self._euler_polys)

    def bernoulli_number(self, n: int) -> Fraction:
        _check_index(n)
        table = self._bernoulli_numbers
        if n >= len(table):
            with self._lock:
                for j in range(len(table), n + 1):
                    s = sum(comb(j + 1, k) * table[k] for k in range(j))
                    table.append(-s / (j + 1))
        return table[n]

    def bernoulli_poly(self, n: int) -> UniPoly:
        _check_index(n)
        _check_degree(n)
        table = self._bernoulli_polys
        if n >= len(table):
            self.bernoulli_number(n)
            bs = self._bernoulli_numbers
            with self._lock:
                for j in range(len(table), n + 1):
                    cs = [comb(j, j - i) * bs[j - i] for i in range(j + 1)]
                    table.append(UniPoly._trusted(cs, "x"))
        return table[n]

    def euler_poly(self, n: int) -> UniPoly:
        _check_index(n)
        _check_degree(n)
        table = self._euler_polys
        if n >= len(table):
            with self._lock:
                for j in range(len(table), n + 1):
                    cs = [Fraction(0)] * j + [Fraction(1)]
                    for k in range(j):
                        w = Fraction(comb(j, k), 2)
                        for i, c in enumerate(table[k].coeffs):
                            cs[i] -= w * c
                    table.append(UniPoly._trusted(cs, "x"))
        return table[n]


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be a nonnegative integer, got {n!r}")


default_cache = SequenceCache()


def bernoulli_number(n: int, cache: Optional[SequenceCache] = None) -> Fraction:
    """B_n, with the convention B_1 = -1/2."""
    return (cache or default_cache).bernoulli_number(n)


def bernoulli_poly(
    n: int, var: str = "x", cache: Optional[SequenceCache] = None
) -> UniPoly:
    return (cache or default_cache).bernoulli_poly(n).rename(var)


def euler_poly(
    n: int, var: str = "x", cache: Optional[SequenceCache] = None
) -> UniPoly:
    return (cache or default_cache).euler_poly(n).rename(var)


def euler_number(n: int, cache: Optional[SequenceCache] = None) -> Fraction:
    """E_n = 2^n E_n(1/2); always an integer."""
    return 2**n * euler_poly(n, cache=cache)(Fraction(1, 2))


@dataclass(frozen=True)
class RationalSeq:
    """A finite prefix ``a_0, ..., a_L`` of a rational sequence."""

    entries: Tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", tuple(Fraction(a) for a in entries))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def last_index(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k < len(self.entries):
            raise IndexError(
                f"sequence index {k} out of range (entries 0..{self.last_index})"
            )
        return self.entries[k]

    @classmethod
    def random(cls, seed: int, length: int, bound: int = 100) -> "RationalSeq":
        """Reproducible sequence with numerators in [-bound, bound] and
        denominators in [1, bound]."""
        rng = random.Random(seed)
        return cls(
            Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            for _ in range(length)
        )

    @classmethod
    def from_function(cls, f, length: int) -> "RationalSeq":
        return cls(f(k) for k in range(length))


def dual_transform(seq: RationalSeq | Sequence, l: int, var: str = "t") -> UniPoly:
    """``A_l(t) = sum_{k=0}^{l} C(l, k) (-1)^k a_k t^(l-k)``."""
    _check_index(l)
    if not isinstance(seq, RationalSeq):
        seq = RationalSeq(seq)
    if len(seq) < l + 1:
        raise IndexError(
            f"dual transform of order {l} needs {l + 1} entries, got {len(seq)}"
        )
    cs = [Fraction(0)] * (l + 1)
    for k in range(l + 1):
        cs[l - k] = (-1) ** k * comb(l, k) * seq[k]
    return UniPoly(cs, var)
