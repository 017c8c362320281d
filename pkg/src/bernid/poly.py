"""Exact dense polynomials over the rationals and the difference calculus.

Scalars are :class:`fractions.Fraction`.  Univariate polynomials store
ascending coefficients with trailing zeros trimmed; bivariate polynomials
store a rectangular grid whose entry ``(i, j)`` is the coefficient of
``x**i * y**j``.  Both forms are canonical, so equality is structural.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, Sequence, Tuple, Union

__all__ = [
    "Rational",
    "UniPoly",
    "BiPoly",
    "AffineArg",
    "DegreeBoundError",
    "DEFAULT_MAX_DEGREE",
    "degree_limit",
    "max_degree",
    "binomial",
    "poly_add",
    "poly_mul",
    "uni_eval",
    "uni_derivative",
    "uni_compose_affine",
    "uni_to_bi",
    "delta",
    "delta_star",
    "invert_delta",
    "invert_delta_star",
    "bi_delta",
    "bi_delta_star",
    "ARG_X",
    "ARG_Y",
    "ARG_Z",
    "ARG_X_PLUS_Y",
]

Rational = Fraction
Scalar = Union[int, Fraction]

DEFAULT_MAX_DEGREE = 128
_max_degree: contextvars.ContextVar[int] = contextvars.ContextVar(
    "bernid_max_degree", default=DEFAULT_MAX_DEGREE
)

_ZERO = Fraction(0)


class DegreeBoundError(ValueError):
    """Raised when a result would exceed the active degree bound."""


def max_degree() -> int:
    return _max_degree.get()


@contextlib.contextmanager
def degree_limit(bound: int) -> Iterator[int]:
    """Temporarily change the degree bound for the current context."""
    if bound < 0:
        raise ValueError("degree bound must be >= 0")
    token = _max_degree.set(bound)
    try:
        yield bound
    finally:
        _max_degree.reset(token)


def _check_degree(d: int) -> None:
    bound = _max_degree.get()
    if d > bound:
        raise DegreeBoundError(f"degree {d} exceeds bound {bound}")


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) as an exact rational; zero when ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return Fraction(comb(n, k))


def _is_scalar(v: object) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


class UniPoly:
    """Dense univariate polynomial with rational coefficients.

    ``var`` is a display label only; equality and hashing look at the
    coefficients alone.  Arithmetic between polynomials with different
    labels is rejected.
    """

    __slots__ = ("coeffs", "var")

    coeffs: Tuple[Fraction, ...]
    var: str

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "x"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        _check_degree(len(cs) - 1)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    @classmethod
    def _trusted(cls, cs: list, var: str) -> "UniPoly":
        while cs and cs[-1] == 0:
            cs.pop()
        _check_degree(len(cs) - 1)
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(cs))
        object.__setattr__(p, "var", var)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def __reduce__(self):
        return (UniPoly, (self.coeffs, self.var))

    @classmethod
    def constant(cls, c: Scalar, var: str = "x") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1, var: str = "x") -> "UniPoly":
        if k < 0:
            raise ValueError("monomial exponent must be >= 0")
        _check_degree(k)
        return cls._trusted([_ZERO] * k + [Fraction(c)], var)

    @classmethod
    def identity(cls, var: str = "x") -> "UniPoly":
        return cls.monomial(1, 1, var)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def rename(self, var: str) -> "UniPoly":
        if var == self.var:
            return self
        p = object.__new__(UniPoly)
        object.__setattr__(p, "coeffs", self.coeffs)
        object.__setattr__(p, "var", var)
        return p

    def __call__(self, r: Scalar) -> Fraction:
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return Fraction(acc)

    def _coerce(self, other) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise ValueError(
                    f"variable mismatch: {self.var!r} vs {other.var!r}"
                )
            return other
        if _is_scalar(other):
            return UniPoly.constant(other, self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return UniPoly._trusted(cs, self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._trusted([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return UniPoly._trusted([], self.var)
            return UniPoly._trusted([c * other for c in self.coeffs], self.var)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly._trusted([], self.var)
        _check_degree(self.degree + o.degree)
        cs = [_ZERO] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    cs[i + j] += a * b
        return UniPoly._trusted(cs, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly.constant(1, self.var)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]!r}, var={self.var!r})"

    def __str__(self) -> str:
        return _format_uni(self)

    def derivative(self) -> "UniPoly":
        return UniPoly._trusted(
            [k * c for k, c in enumerate(self.coeffs)][1:], self.var
        )

    def compose_affine(self, a: Scalar, b: Scalar) -> "UniPoly":
        """Return ``P(a*u + b)``."""
        lin = UniPoly((b, a), self.var)
        acc = UniPoly._trusted([], self.var)
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc


def _format_uni(p: UniPoly) -> str:
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c:
            mono = "" if k == 0 else p.var if k == 1 else f"{p.var}^{k}"
            terms.append((c, mono))
    return _join_terms(terms)


def _join_terms(terms: Sequence[Tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if idx == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


@dataclass(frozen=True)
class AffineArg:
    """The linear form ``c0 + cx*x + cy*y``."""

    c0: Fraction = _ZERO
    cx: Fraction = _ZERO
    cy: Fraction = _ZERO

    def __post_init__(self):
        for name in ("c0", "cx", "cy"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def as_bipoly(self) -> "BiPoly":
        return BiPoly._from_terms({(0, 0): self.c0, (1, 0): self.cx, (0, 1): self.cy})


ARG_X = AffineArg(0, 1, 0)
ARG_Y = AffineArg(0, 0, 1)
ARG_Z = AffineArg(1, -1, -1)
ARG_X_PLUS_Y = AffineArg(0, 1, 1)


class BiPoly:
    """Dense bivariate polynomial in ``x`` and ``y``.

    ``coeffs[i][j]`` is the coefficient of ``x**i * y**j``; the grid is
    rectangular and trimmed of trailing all-zero rows and columns, so the
    zero polynomial is the empty grid.
    """

    __slots__ = ("coeffs", "_terms")

    VARS = ("x", "y")

    coeffs: Tuple[Tuple[Fraction, ...], ...]

    def __init__(self, coeffs: Iterable[Iterable[Scalar]] = ()):
        terms: Dict[Tuple[int, int], Fraction] = {}
        for i, row in enumerate(coeffs):
            for j, c in enumerate(row):
                c = Fraction(c)
                if c:
                    terms[(i, j)] = c
        self._init_from(terms)

    def _init_from(self, terms: Dict[Tuple[int, int], Fraction]) -> None:
        nz = {k: v for k, v in terms.items() if v}
        if nz:
            _check_degree(max(i + j for i, j in nz))
            nx = max(i for i, _ in nz) + 1
            ny = max(j for _, j in nz) + 1
            grid = [[_ZERO] * ny for _ in range(nx)]
            for (i, j), c in nz.items():
                grid[i][j] = c
            coeffs = tuple(tuple(r) for r in grid)
        else:
            coeffs = ()
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(
            self, "_terms", tuple((i, j, c) for (i, j), c in sorted(nz.items()))
        )

    @classmethod
    def _from_terms(cls, terms: Dict[Tuple[int, int], Fraction]) -> "BiPoly":
        p = object.__new__(cls)
        p._init_from(terms)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    def __reduce__(self):
        return (BiPoly, (self.coeffs,))

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls._from_terms({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = 1) -> "BiPoly":
        if i < 0 or j < 0:
            raise ValueError("monomial exponents must be >= 0")
        return cls._from_terms({(i, j): Fraction(c)})

    @classmethod
    def from_uni(cls, p: UniPoly, slot: str = "x") -> "BiPoly":
        """Embed a univariate polynomial as a polynomial in ``x`` or ``y``."""
        if slot == "x":
            return cls._from_terms({(k, 0): c for k, c in enumerate(p.coeffs)})
        if slot == "y":
            return cls._from_terms({(0, k): c for k, c in enumerate(p.coeffs)})
        raise ValueError(f"unknown slot {slot!r}")

    def terms(self) -> Tuple[Tuple[int, int, Fraction], ...]:
        """Nonzero ``(i, j, coefficient)`` triples in lexicographic order."""
        return self._terms

    @property
    def degree(self) -> int:
        """Total degree, with -1 for the zero polynomial."""
        return max((i + j for i, j, _ in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        if var == "x":
            return len(self.coeffs) - 1
        if var == "y":
            return len(self.coeffs[0]) - 1 if self.coeffs else -1
        raise ValueError(f"unknown variable {var!r}")

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, i: int, j: int) -> Fraction:
        if 0 <= i < len(self.coeffs) and 0 <= j < len(self.coeffs[0]):
            return self.coeffs[i][j]
        return _ZERO

    def __call__(self, x: Scalar, y: Scalar) -> Fraction:
        acc = _ZERO
        for row in reversed(self.coeffs):
            r = _ZERO
            for c in reversed(row):
                r = r * y + c
            acc = acc * x + r
        return Fraction(acc)

    @staticmethod
    def _coerce(other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if _is_scalar(other):
            return BiPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = {(i, j): c for i, j, c in self._terms}
        for i, j, c in o._terms:
            acc[(i, j)] = acc.get((i, j), _ZERO) + c
        return BiPoly._from_terms(acc)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._from_terms({(i, j): -c for i, j, c in self._terms})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = {(i, j): c for i, j, c in self._terms}
        for i, j, c in o._terms:
            acc[(i, j)] = acc.get((i, j), _ZERO) - c
        return BiPoly._from_terms(acc)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if _is_scalar(other):
            return BiPoly._from_terms({(i, j): c * other for i, j, c in self._terms})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return BiPoly._from_terms({})
        _check_degree(self.degree + o.degree)
        acc: Dict[Tuple[int, int], Fraction] = {}
        get = acc.get
        for i1, j1, c1 in self._terms:
            for i2, j2, c2 in o._terms:
                key = (i1 + i2, j1 + j2)
                acc[key] = get(key, _ZERO) + c1 * c2
        return BiPoly._from_terms(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = BiPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == BiPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BiPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"BiPoly({[[str(c) for c in row] for row in self.coeffs]!r})"

    def __str__(self) -> str:
        terms = []
        for i, j, c in sorted(self._terms, key=lambda t: (-(t[0] + t[1]), -t[0])):
            parts = []
            if i:
                parts.append("x" if i == 1 else f"x^{i}")
            if j:
                parts.append("y" if j == 1 else f"y^{j}")
            terms.append((c, "*".join(parts)))
        return _join_terms(terms)

    def shift(self, var: str, h: Scalar = 1) -> "BiPoly":
        """Return the polynomial with ``var`` replaced by ``var + h``."""
        if var not in self.VARS:
            raise ValueError(f"unknown variable {var!r}")
        h = Fraction(h)
        acc: Dict[Tuple[int, int], Fraction] = {}
        for i, j, c in self._terms:
            e = i if var == "x" else j
            for k in range(e + 1):
                key = (k, j) if var == "x" else (i, k)
                acc[key] = acc.get(key, _ZERO) + c * comb(e, k) * h ** (e - k)
        return BiPoly._from_terms(acc)


PolyT = Union[UniPoly, BiPoly]


def _same_kind(p, q) -> None:
    if type(p) is not type(q) or not isinstance(p, (UniPoly, BiPoly)):
        raise TypeError(
            f"polynomial kind mismatch: {type(p).__name__} vs {type(q).__name__}"
        )


def poly_add(p: PolyT, q: PolyT) -> PolyT:
    _same_kind(p, q)
    return p + q


def poly_mul(p: PolyT, q: PolyT) -> PolyT:
    _same_kind(p, q)
    return p * q


def uni_eval(p: UniPoly, r: Scalar) -> Fraction:
    return p(r)


def uni_derivative(p: UniPoly) -> UniPoly:
    return p.derivative()


def uni_compose_affine(p: UniPoly, a: Scalar, b: Scalar) -> UniPoly:
    return p.compose_affine(a, b)


def uni_to_bi(p: UniPoly, arg: AffineArg) -> BiPoly:
    """Expand ``P(c0 + cx*x + cy*y)`` as a bivariate polynomial."""
    lin = arg.as_bipoly()
    acc = BiPoly._from_terms({})
    for c in reversed(p.coeffs):
        acc = acc * lin + c
    return acc


def delta(p: UniPoly) -> UniPoly:
    """Forward difference ``P(u+1) - P(u)``."""
    return p.compose_affine(1, 1) - p


def delta_star(p: UniPoly) -> UniPoly:
    """Forward sum ``P(u+1) + P(u)``."""
    return p.compose_affine(1, 1) + p


def invert_delta(r: UniPoly) -> UniPoly:
    """The unique ``P`` with ``delta(P) == r`` and ``P(0) == 0``."""
    d = r.degree
    if d < 0:
        return UniPoly._trusted([], r.var)
    _check_degree(d + 1)
    rest = list(r.coeffs)
    p = [_ZERO] * (d + 2)
    # delta(u^(k+1)) = sum_{j<=k} C(k+1, j) u^j, so peel from the top.
    for k in range(d, -1, -1):
        c = rest[k] / (k + 1)
        p[k + 1] = c
        if c:
            for j in range(k + 1):
                rest[j] -= c * comb(k + 1, j)
    return UniPoly._trusted(p, r.var)


def invert_delta_star(r: UniPoly) -> UniPoly:
    """The unique ``P`` with ``delta_star(P) == r``."""
    d = r.degree
    if d < 0:
        return UniPoly._trusted([], r.var)
    rest = list(r.coeffs)
    p = [_ZERO] * (d + 1)
    # delta_star(u^k) = 2 u^k + sum_{j<k} C(k, j) u^j.
    for k in range(d, -1, -1):
        c = rest[k] / 2
        p[k] = c
        if c:
            rest[k] = _ZERO
            for j in range(k):
                rest[j] -= c * comb(k, j)
    return UniPoly._trusted(p, r.var)


def bi_delta(p: BiPoly, var: str) -> BiPoly:
    return p.shift(var) - p


def bi_delta_star(p: BiPoly, var: str) -> BiPoly:
    return p.shift(var) + p
