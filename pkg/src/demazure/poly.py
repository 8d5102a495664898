"""Sparse integer polynomials in x1, x2, ... and the operators acting on them.

A polynomial is a map from exponent tuples to nonzero integers.  Exponent
tuples are stored padded to ``nvars``; equality ignores trailing unused
variables, so ``x1`` in one variable equals ``x1`` in three.

Operator words apply their rightmost letter first, matching how products of
operators are written:

>>> f = Polynomial.monomial((3, 1, 0))
>>> str(apply_letters("theta", (2, 1), f))
'x1^2*x2*x3 + x1^2*x3^2 + x1*x2^2*x3 + x1*x2*x3^2 + x1*x3^3'
"""

from __future__ import annotations

import enum
import re
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .perm import Permutation, some_reduced_word

Exponent = tuple[int, ...]


def _strip(exp: Exponent) -> Exponent:
    end = len(exp)
    while end and exp[end - 1] == 0:
        end -= 1
    return exp[:end]


def _pad(exp: Sequence[int], n: int) -> Exponent:
    exp = tuple(exp)
    if len(exp) > n:
        if any(exp[n:]):
            raise ValueError(f"exponent {exp} does not fit in {n} variables")
        return exp[:n]
    return exp + (0,) * (n - len(exp))


class Polynomial:
    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None, nvars: int | None = None):
        terms = terms or {}
        width = max((len(_strip(tuple(e))) for e in terms), default=0)
        n = width if nvars is None else max(nvars, width)
        clean: dict[Exponent, int] = {}
        for exp, c in terms.items():
            if c:
                key = _pad(exp, n)
                clean[key] = clean.get(key, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}
        self.nvars = n
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int], nvars: int) -> Polynomial:
        # trusted constructor: keys already padded, zero coefficients removed
        p = cls.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int = 0) -> Polynomial:
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c: int, nvars: int = 0) -> Polynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, alpha: Sequence[int], coeff: int = 1) -> Polynomial:
        alpha = tuple(alpha)
        if any(a < 0 for a in alpha):
            raise ValueError(f"negative exponent in {alpha}")
        return cls({alpha: coeff}, len(alpha))

    @classmethod
    def variable(cls, i: int, nvars: int | None = None) -> Polynomial:
        n = i if nvars is None else max(i, nvars)
        exp = [0] * n
        exp[i - 1] = 1
        return cls._raw({tuple(exp): 1}, n)

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._terms.items())

    def coefficient(self, alpha: Sequence[int]) -> int:
        alpha = tuple(alpha)
        if len(alpha) > self.nvars and any(alpha[self.nvars:]):
            return 0
        return self._terms.get(_pad(alpha, self.nvars), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def extend(self, nvars: int) -> Polynomial:
        if nvars <= self.nvars:
            return self
        extra = (0,) * (nvars - self.nvars)
        return Polynomial._raw({e + extra: c for e, c in self._terms.items()}, nvars)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def support(self) -> list[Exponent]:
        return sorted_exponents(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.nvars == other.nvars:
            return self._terms == other._terms
        n = max(self.nvars, other.nvars)
        return self.extend(n)._terms == other.extend(n)._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((_strip(e), c) for e, c in self._terms.items()))
        return self._hash

    def _coerce(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other: Polynomial | int) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(self.nvars, other.nvars)
        a, b = self.extend(n), other.extend(n)
        terms = dict(a._terms)
        for e, c in b._terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Polynomial._raw(terms, n)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other: Polynomial | int) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return scale(other, self)
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(self.nvars, other.nvars)
        a, b = self.extend(n), other.extend(n)
        terms: dict[Exponent, int] = {}
        for ea, ca in a._terms.items():
            for eb, cb in b._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return Polynomial._raw({e: c for e, c in terms.items() if c}, n)

    def __rmul__(self, other: int) -> Polynomial:
        if isinstance(other, int):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, k: int) -> Polynomial:
        result = Polynomial.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, nvars={self.nvars})"

    def __str__(self) -> str:
        return format_polynomial(self)


def sorted_exponents(exps: Iterable[Exponent]) -> list[Exponent]:
    """Graded lex: higher degree first, then lexicographically larger first."""
    return sorted(exps, key=lambda e: (sum(e), e), reverse=True)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def scale(c: int, f: Polynomial) -> Polynomial:
    if c == 0:
        return Polynomial.zero(f.nvars)
    return Polynomial._raw({e: c * v for e, v in f._terms.items()}, f.nvars)


def total(polys: Iterable[Polynomial], nvars: int = 0) -> Polynomial:
    """Sum many polynomials with a single accumulator."""
    acc: dict[Exponent, int] = {}
    n = nvars
    polys = list(polys)
    for p in polys:
        n = max(n, p.nvars)
    for p in polys:
        for e, c in p.extend(n)._terms.items():
            acc[e] = acc.get(e, 0) + c
    return Polynomial._raw({e: c for e, c in acc.items() if c}, n)


# ---------------------------------------------------------------- operators


class OperatorKind(enum.Enum):
    PARTIAL = "partial"
    PI = "pi"
    THETA = "theta"
    SWAP = "swap"


@lru_cache(maxsize=None)
def _partial_pair(a: int, b: int) -> tuple[tuple[int, int, int], ...]:
    """Divided difference of x^a y^b as ((a', b', coeff), ...)."""
    if a > b:
        return tuple((a - 1 - t, b + t, 1) for t in range(a - b))
    if a < b:
        return tuple((a + t, b - 1 - t, -1) for t in range(b - a))
    return ()


def _check_index(i: int) -> None:
    if i < 1:
        raise ValueError(f"operator index must be >= 1, got {i}")


def _termwise(i: int, f: Polynomial, shift_a: int, shift_out_b: int) -> Polynomial:
    # shared kernel: exponents (a + shift_a, b) -> partial -> add shift_out_b to x_{i+1}
    _check_index(i)
    f = f.extend(i + 1)
    lo, hi = i - 1, i
    terms: dict[Exponent, int] = {}
    for exp, c in f._terms.items():
        for a2, b2, s in _partial_pair(exp[lo] + shift_a, exp[hi]):
            e = list(exp)
            e[lo] = a2
            e[hi] = b2 + shift_out_b
            key = tuple(e)
            terms[key] = terms.get(key, 0) + s * c
    return Polynomial._raw({e: c for e, c in terms.items() if c}, f.nvars)


def swap(i: int, f: Polynomial) -> Polynomial:
    """Exchange x_i and x_{i+1}."""
    _check_index(i)
    f = f.extend(i + 1)
    terms = {}
    for exp, c in f._terms.items():
        e = list(exp)
        e[i - 1], e[i] = e[i], e[i - 1]
        terms[tuple(e)] = c
    return Polynomial._raw(terms, f.nvars)


def partial(i: int, f: Polynomial) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), evaluated termwise."""
    return _termwise(i, f, 0, 0)


def pi(i: int, f: Polynomial) -> Polynomial:
    """partial_i applied to x_i * f."""
    return _termwise(i, f, 1, 0)


def theta(i: int, f: Polynomial) -> Polynomial:
    """x_{i+1} times partial_i f."""
    return _termwise(i, f, 0, 1)


_APPLY = {
    OperatorKind.PARTIAL: partial,
    OperatorKind.PI: pi,
    OperatorKind.THETA: theta,
    OperatorKind.SWAP: swap,
}


def _kind(kind: OperatorKind | str) -> OperatorKind:
    return kind if isinstance(kind, OperatorKind) else OperatorKind(kind)


def apply_letters(kind: OperatorKind | str, letters: Sequence[int], f: Polynomial) -> Polynomial:
    """Apply O_{i_1} O_{i_2} ... O_{i_k} to f, i.e. i_k first."""
    op = _APPLY[_kind(kind)]
    for i in reversed(tuple(letters)):
        f = op(i, f)
    return f


def apply_word(kind: OperatorKind | str, p: Permutation, f: Polynomial) -> Polynomial:
    """The operator indexed by ``p`` through its bubble-sort reduced word."""
    return apply_letters(kind, some_reduced_word(p), f)


# ---------------------------------------------------------------- text form


def _format_monomial(exp: Exponent) -> str:
    parts = []
    for idx, a in enumerate(exp, start=1):
        if a == 1:
            parts.append(f"x{idx}")
        elif a > 1:
            parts.append(f"x{idx}^{a}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    chunks = []
    for exp in sorted_exponents(f._terms):
        c = f._terms[exp]
        mono = _format_monomial(exp)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


_TERM_RE = re.compile(r"([+-])?\s*([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:x(\d+)(?:\^(\d+))?|(\d+))$")


def parse_polynomial(text: str, nvars: int | None = None) -> Polynomial:
    """Inverse of the text form; accepts ``2*x1^3*x2 - x3 + 4``."""
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty polynomial text")
    terms: dict[Exponent, int] = {}
    pos = 0
    width = 0
    parsed: list[tuple[dict[int, int], int]] = []
    for m in _TERM_RE.finditer(compact):
        if m.start() != pos:
            raise ValueError(f"cannot parse polynomial {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = sign
        powers: dict[int, int] = {}
        for factor in m.group(2).split("*"):
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            if fm.group(3) is not None:
                coeff *= int(fm.group(3))
            else:
                var = int(fm.group(1))
                if var < 1:
                    raise ValueError(f"variables are numbered from 1: {factor!r}")
                powers[var] = powers.get(var, 0) + int(fm.group(2) or 1)
                width = max(width, var)
        parsed.append((powers, coeff))
    if pos != len(compact):
        raise ValueError(f"cannot parse polynomial {text!r}")
    n = width if nvars is None else max(width, nvars)
    for powers, coeff in parsed:
        exp = [0] * n
        for var, a in powers.items():
            exp[var - 1] = a
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + coeff
    return Polynomial(terms, n)
