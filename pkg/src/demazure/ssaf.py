"""Semi-standard augmented fillings and the two routes to atoms and keys.

Columns are stored bottom-to-top without the basement; row 0 is the basement
row, so ``entry(i, 0)`` is the basement value of column ``i``.  Columns and
rows are 1-based in the public helpers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .perm import Permutation, compose
from .poly import Polynomial, apply_word
from .shape import WeakComposition, omega, reverse, sort_desc

DEFAULT_BUDGET_CELLS = 24
BUDGET_ENV = "DEMAZURE_BUDGET_CELLS"

Cell = tuple[int, int]  # (column, row), row 0 is the basement


class BudgetExceeded(RuntimeError):
    """The filling enumeration would exceed the configured cell budget."""


def budget_cells(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET_CELLS


@dataclass(frozen=True)
class SSAF:
    basement: Permutation
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        if len(cols) != self.basement.n:
            raise ValueError("one column per basement cell is required")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def empty(cls, basement: Permutation) -> SSAF:
        return cls(basement, ((),) * basement.n)

    @property
    def shape(self) -> WeakComposition:
        return tuple(len(c) for c in self.columns)

    @property
    def k(self) -> int:
        return self.basement.n

    def entry(self, column: int, row: int) -> int | None:
        if row == 0:
            return self.basement(column)
        col = self.columns[column - 1]
        return col[row - 1] if row <= len(col) else None

    def cells(self) -> list[Cell]:
        return [(i, r) for i in range(1, self.k + 1) for r in range(len(self.columns[i - 1]) + 1)]

    def weight(self) -> WeakComposition:
        return weight(self)

    def render(self) -> str:
        return render(self)


def is_inversion_triple(x: int, y: int, z: int) -> bool:
    """Entries of cells X, Y, Z; coinversion means x <= z <= y."""
    return not (x <= z <= y)


def triples(shape: Sequence[int]) -> Iterator[tuple[Cell, Cell, Cell]]:
    """All Type A and Type B triples (X, Y, Z) of an augmented diagram."""
    k = len(shape)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            hi, hj = shape[i - 1], shape[j - 1]
            if hi >= hj:
                for r in range(1, hj + 1):
                    yield (i, r), (i, r - 1), (j, r)
            else:
                for r in range(1, min(hj, hi + 1) + 1):
                    yield (j, r), (j, r - 1), (i, r - 1)


def validate(F: SSAF) -> bool:
    for i, col in enumerate(F.columns, start=1):
        prev = F.basement(i)
        for v in col:
            if v < 1 or v > prev:
                return False
            prev = v
    return all(
        is_inversion_triple(F.entry(*x), F.entry(*y), F.entry(*z)) for x, y, z in triples(F.shape)
    )


def reading_order(shape: Sequence[int], basement: Permutation | None = None) -> list[Cell]:
    """Cells from the top row down to the basement, left to right in each row."""
    top = max(shape, default=0)
    return [
        (i, r)
        for r in range(top, -1, -1)
        for i in range(1, len(shape) + 1)
        if r <= shape[i - 1]
    ]


def weight(F: SSAF) -> WeakComposition:
    counts = [0] * F.k
    for col in F.columns:
        for v in col:
            counts[v - 1] += 1
    return tuple(counts)  # the basement contributes one of each value, cancelling the -1


def render(F: SSAF) -> str:
    width = len(str(F.k))
    lines = []
    for r in range(max(F.shape, default=0), -1, -1):
        row = []
        for i in range(1, F.k + 1):
            v = F.entry(i, r)
            row.append(("." if v is None else str(v)).rjust(width))
        lines.append(" ".join(row))
    return "\n".join(lines)


def enumerate_ssaf(
    basement: Permutation, shape: Sequence[int], budget: int | None = None
) -> list[SSAF]:
    """Every SSAF with the given basement and shape, in a canonical order."""
    shape = tuple(shape)
    if len(shape) != basement.n:
        raise ValueError("shape and basement must have the same length")
    limit = budget_cells(budget)
    if sum(shape) + len(shape) > limit:
        raise BudgetExceeded(f"{sum(shape) + len(shape)} cells exceeds budget {limit}")
    return [SSAF(basement, cols) for cols in _fillings(basement, shape)]


def _fillings(basement: Permutation, shape: WeakComposition) -> Iterator[tuple[tuple[int, ...], ...]]:
    k = len(shape)
    top = max(shape, default=0)
    order = [(i, r) for r in range(1, top + 1) for i in range(k) if r <= shape[i]]
    grid = [[basement(i + 1)] + [0] * shape[i] for i in range(k)]

    # triples whose last cell (in fill order) is the key, as ((xc, xr), (yc, yr), (zc, zr))
    checks: dict[tuple[int, int], list[tuple[tuple[int, int], ...]]] = {c: [] for c in order}
    for (xc, xr), (yc, yr), (zc, zr) in triples(shape):
        x, y, z = (xc - 1, xr), (yc - 1, yr), (zc - 1, zr)
        last = max((x, y, z), key=lambda c: (c[1], c[0]))
        checks[last].append((x, y, z))

    def ok(cell: tuple[int, int]) -> bool:
        for x, y, z in checks[cell]:
            fx, fy, fz = grid[x[0]][x[1]], grid[y[0]][y[1]], grid[z[0]][z[1]]
            if fx <= fz <= fy:
                return False
        return True

    def fill(pos: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if pos == len(order):
            yield tuple(tuple(col[1:]) for col in grid)
            return
        i, r = order[pos]
        for v in range(grid[i][r - 1], 0, -1):
            grid[i][r] = v
            if ok((i, r)):
                yield from fill(pos + 1)
        grid[i][r] = 0

    yield from fill(0)


def polynomial_of_fillings(fillings: Sequence[SSAF], nvars: int) -> Polynomial:
    terms: dict[tuple[int, ...], int] = {}
    for F in fillings:
        w = weight(F)
        terms[w] = terms.get(w, 0) + 1
    return Polynomial(terms, nvars)


def atom_by_fillings(alpha: Sequence[int], budget: int | None = None) -> Polynomial:
    alpha = tuple(alpha)
    k = len(alpha)
    return polynomial_of_fillings(enumerate_ssaf(Permutation.identity(k), alpha, budget), k)


def key_by_fillings(gamma: Sequence[int], budget: int | None = None) -> Polynomial:
    gamma = tuple(gamma)
    k = len(gamma)
    return polynomial_of_fillings(enumerate_ssaf(Permutation.longest(k), reverse(gamma), budget), k)


@lru_cache(maxsize=None)
def atom_by_operators(alpha: WeakComposition) -> Polynomial:
    """theta indexed by omega(alpha)^-1, applied to the sorted monomial."""
    alpha = tuple(alpha)
    if not alpha:
        return Polynomial.constant(1)
    lam = Polynomial.monomial(sort_desc(alpha))
    return apply_word("theta", omega(alpha).inverse(), lam)


@lru_cache(maxsize=None)
def key_by_operators(gamma: WeakComposition) -> Polynomial:
    """pi indexed by (longest element) * omega(reverse(gamma))^-1 on the sorted monomial."""
    gamma = tuple(gamma)
    if not gamma:
        return Polynomial.constant(1)
    alpha = reverse(gamma)
    lam = Polynomial.monomial(sort_desc(alpha))
    word = compose(Permutation.longest(len(alpha)), omega(alpha).inverse())
    return apply_word("pi", word, lam)


def atom(alpha: Sequence[int]) -> Polynomial:
    return atom_by_operators(tuple(alpha))


def key(gamma: Sequence[int]) -> Polynomial:
    return key_by_operators(tuple(gamma))
