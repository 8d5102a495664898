"""Expansion of polynomials in the atom and key bases.

>>> from demazure.ssaf import key
>>> str(expand_atoms(key((3, 0, 1))))
'A(3,1,0) + A(3,0,1)'
>>> str(atoms_to_keys(expand_atoms(Polynomial.variable(2))))
'-K(1,0) + K(0,1)'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping, Sequence

import sympy

from .perm import bruhat_leq
from .poly import Polynomial, sorted_exponents, total, scale
from .shape import WeakComposition, compositions, format_composition, omega, rearrangements, sort_desc
from .ssaf import atom, key

# greedy peeling gives up after this many subtractions per term and falls back
MAX_PEEL_FACTOR = 4


@dataclass(frozen=True)
class Expansion:
    coeffs: Mapping[WeakComposition, int]
    nvars: int
    basis: str = field(default="atom", init=False)

    def __post_init__(self):
        clean = {tuple(b): int(c) for b, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", clean)

    def _element(self, beta: WeakComposition) -> Polynomial:
        raise NotImplementedError

    def polynomial(self) -> Polynomial:
        return total((scale(c, self._element(b)) for b, c in self.coeffs.items()), self.nvars)

    def min_coefficient(self) -> int:
        return min(self.coeffs.values(), default=0)

    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def ordered(self) -> list[tuple[WeakComposition, int]]:
        return [(b, self.coeffs[b]) for b in sorted_exponents(self.coeffs)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Expansion):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        letter = "A" if self.basis == "atom" else "K"
        chunks = []
        for beta, c in self.ordered():
            label = f"{letter}{format_composition(beta)}"
            body = label if abs(c) == 1 else f"{abs(c)}*{label}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(("+ " if c > 0 else "- ") + body)
        return " ".join(chunks) or "0"


@dataclass(frozen=True, eq=False)
class AtomExpansion(Expansion):
    basis: str = field(default="atom", init=False)

    def _element(self, beta: WeakComposition) -> Polynomial:
        return atom(beta)


@dataclass(frozen=True, eq=False)
class KeyExpansion(Expansion):
    basis: str = field(default="key", init=False)

    def _element(self, beta: WeakComposition) -> Polynomial:
        return key(beta)


def _peel_rank(beta: WeakComposition) -> tuple:
    # atoms carry their index monomial plus terms of strictly smaller sorted shape,
    # so peeling the largest sorted shape first never reintroduces a peeled term
    return (sum(beta), sort_desc(beta), -omega(beta).length(), beta)


def expand_atoms_greedy(f: Polynomial, nvars: int | None = None) -> AtomExpansion | None:
    """Peel leading atoms; ``None`` when the remainder fails to shrink as expected."""
    n = f.nvars if nvars is None else max(nvars, f.nvars)
    rest = dict(f.extend(n).items())
    coeffs: dict[WeakComposition, int] = {}
    budget = MAX_PEEL_FACTOR * (len(rest) + 1) * 8
    while rest:
        budget -= 1
        if budget < 0:
            return None
        beta = max(rest, key=_peel_rank)
        c = rest[beta]
        coeffs[beta] = coeffs.get(beta, 0) + c
        for exp, v in atom(beta).items():
            nv = rest.get(exp, 0) - c * v
            if nv:
                rest[exp] = nv
            else:
                rest.pop(exp, None)
    return AtomExpansion(coeffs, n)


def expand_atoms_linear(f: Polynomial, nvars: int | None = None) -> AtomExpansion:
    """Exact linear solve against all atoms of each homogeneous degree."""
    n = f.nvars if nvars is None else max(nvars, f.nvars)
    f = f.extend(n)
    coeffs: dict[WeakComposition, int] = {}
    by_degree: dict[int, dict[WeakComposition, int]] = {}
    for exp, c in f.items():
        by_degree.setdefault(sum(exp), {})[exp] = c
    for degree, part in by_degree.items():
        basis = list(compositions(degree, n))
        index = {b: i for i, b in enumerate(basis)}
        matrix = sympy.zeros(len(basis), len(basis))
        for j, beta in enumerate(basis):
            for exp, v in atom(beta).items():
                matrix[index[exp], j] = v
        rhs = sympy.Matrix([part.get(b, 0) for b in basis])
        solution = matrix.LUsolve(rhs)
        for beta, value in zip(basis, solution):
            if value != 0:
                if not value.is_integer:
                    raise ArithmeticError(f"non-integral atom coefficient {value}")
                coeffs[beta] = int(value)
    return AtomExpansion(coeffs, n)


def expand_atoms(f: Polynomial, nvars: int | None = None) -> AtomExpansion:
    expansion = expand_atoms_greedy(f, nvars)
    if expansion is None:
        expansion = expand_atoms_linear(f, nvars)
    return expansion


@lru_cache(maxsize=None)
def key_atom_support(gamma: WeakComposition) -> frozenset[WeakComposition]:
    """Atoms occurring in the key of ``gamma``: rearrangements with smaller sorting permutation."""
    gamma = tuple(gamma)
    top = omega(gamma)
    return frozenset(
        beta for beta in rearrangements(sort_desc(gamma)) if bruhat_leq(omega(beta), top)
    )


def atoms_to_keys(e: AtomExpansion) -> KeyExpansion:
    """Unitriangular change of basis inside each rearrangement class."""
    rest = dict(e.coeffs)
    coeffs: dict[WeakComposition, int] = {}
    while rest:
        # a longest sorting permutation is only reachable from its own key
        beta = max(rest, key=lambda b: (omega(b).length(), b))
        d = rest[beta]
        coeffs[beta] = d
        for delta in key_atom_support(beta):
            nv = rest.get(delta, 0) - d
            if nv:
                rest[delta] = nv
            else:
                rest.pop(delta, None)
    return KeyExpansion(coeffs, e.nvars)


def keys_to_atoms(e: KeyExpansion) -> AtomExpansion:
    coeffs: dict[WeakComposition, int] = {}
    for gamma, c in e.coeffs.items():
        for beta in key_atom_support(gamma):
            coeffs[beta] = coeffs.get(beta, 0) + c
    return AtomExpansion(coeffs, e.nvars)


def expand_keys(f: Polynomial, nvars: int | None = None) -> KeyExpansion:
    return atoms_to_keys(expand_atoms(f, nvars))


def is_atom_positive(f: Polynomial, nvars: int | None = None) -> bool:
    return expand_atoms(f, nvars).is_positive()


def is_key_positive(f: Polynomial, nvars: int | None = None) -> bool:
    return expand_keys(f, nvars).is_positive()


def expand(f: Polynomial, basis: str, nvars: int | None = None) -> Expansion:
    expanders: dict[str, Callable[[Polynomial, int | None], Expansion]] = {
        "atom": expand_atoms,
        "key": expand_keys,
    }
    if basis not in expanders:
        raise ValueError(f"unknown basis {basis!r}")
    return expanders[basis](f, nvars)


def from_terms(terms: Sequence[tuple[int, WeakComposition]], basis: str, nvars: int) -> Expansion:
    cls = AtomExpansion if basis == "atom" else KeyExpansion
    coeffs: dict[WeakComposition, int] = {}
    for c, beta in terms:
        coeffs[tuple(beta)] = coeffs.get(tuple(beta), 0) + c
    return cls(coeffs, nvars)
