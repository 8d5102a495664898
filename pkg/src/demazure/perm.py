"""Permutations of {1, ..., n} in one-line notation.

Products compose as functions, ``(p * q)(j) == p(q(j))``, so a word
``i_1 i_2 ... i_k`` evaluates to ``s_{i_1} s_{i_2} ... s_{i_k}``.  Permutations
of different sizes are combined by padding the shorter one with fixed points.

>>> p = Permutation.from_word([3, 4, 3, 2], n=5)
>>> str(p), p.length()
('15243', 4)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "ReducedWordLimitError",
    "all_reduced_words",
    "bruhat_leq",
    "bruhat_leq_by_subwords",
    "compose",
    "evaluate_word",
    "inversions",
    "is_subword",
    "length",
    "lower_interval",
    "some_reduced_word",
]

MAX_EXHAUSTIVE_N = 7

ReducedWord = tuple[int, ...]


class ReducedWordLimitError(ValueError):
    """Raised when an exhaustive enumeration is requested beyond the size guard."""


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        """The reversal n, n-1, ..., 1."""
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int | None = None) -> Permutation:
        """The transposition s_i = (i, i+1) in S_n (n defaults to i+1)."""
        n = i + 1 if n is None else n
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int | None = None) -> Permutation:
        return evaluate_word(word, n)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        text = text.strip()
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",")))
        return cls(tuple(int(ch) for ch in text))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        if j > self.n:
            return j
        return self.images[j - 1]

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.images)
        return ",".join(str(v) for v in self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def padded(self, n: int) -> Permutation:
        if n <= self.n:
            return self
        return Permutation(self.images + tuple(range(self.n + 1, n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for j, v in enumerate(self.images, start=1):
            inv[v - 1] = j
        return Permutation(tuple(inv))

    def inversions(self) -> int:
        return inversions(self)

    def length(self) -> int:
        return inversions(self)

    def is_identity(self) -> bool:
        return all(v == j for j, v in enumerate(self.images, start=1))

    def left_descents(self) -> list[int]:
        """Indices i with l(s_i p) < l(p), i.e. i+1 sits left of i."""
        pos = self.inverse().images
        return [i for i in range(1, self.n) if pos[i] < pos[i - 1]]

    def trimmed(self) -> Permutation:
        """Drop trailing fixed points (keeps at least one entry)."""
        images = list(self.images)
        while len(images) > 1 and images[-1] == len(images):
            images.pop()
        return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``compose(p, q)(j) == p(q(j))``."""
    n = max(p.n, q.n)
    p, q = p.padded(n), q.padded(n)
    return Permutation(tuple(p.images[q.images[j] - 1] for j in range(n)))


def evaluate_word(word: Iterable[int], n: int | None = None) -> Permutation:
    """Evaluate s_{i_1} s_{i_2} ... s_{i_k}; the word need not be reduced."""
    word = list(word)
    size = max([n or 1] + [i + 1 for i in word])
    images = list(range(1, size + 1))
    # right multiplication by s_i swaps positions i and i+1
    for i in word:
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def inversions(p: Permutation) -> int:
    im = p.images
    return sum(1 for a, b in combinations(range(p.n), 2) if im[a] > im[b])


def length(p: Permutation) -> int:
    return inversions(p)


def some_reduced_word(p: Permutation) -> ReducedWord:
    """The bubble-sort reduced word.

    Moves 1, then 2, ... to the front by adjacent swaps on the right, which
    yields ``p s_{j_1} ... s_{j_m} = id`` and hence ``p = s_{j_m} ... s_{j_1}``.
    """
    images = list(p.images)
    applied: list[int] = []
    for value in range(1, p.n + 1):
        pos = images.index(value)
        while pos > value - 1:
            images[pos - 1], images[pos] = images[pos], images[pos - 1]
            applied.append(pos)  # s_pos swaps 1-based positions pos, pos+1
            pos -= 1
    return tuple(reversed(applied))


@lru_cache(maxsize=None)
def _reduced_words(images: tuple[int, ...]) -> frozenset[ReducedWord]:
    p = Permutation(images)
    if p.is_identity():
        return frozenset({()})
    words = set()
    for i in p.left_descents():
        rest = compose(Permutation.simple(i, p.n), p)
        for w in _reduced_words(rest.images):
            words.add((i,) + w)
    return frozenset(words)


def all_reduced_words(p: Permutation) -> frozenset[ReducedWord]:
    """Every reduced word of ``p`` (n <= 7)."""
    p = p.trimmed()
    if p.n > MAX_EXHAUSTIVE_N:
        raise ReducedWordLimitError(
            f"reduced-word enumeration is limited to n <= {MAX_EXHAUSTIVE_N}, got {p.n}"
        )
    return _reduced_words(p.images)


def is_subword(small: Sequence[int], big: Sequence[int]) -> bool:
    it = iter(big)
    return all(letter in it for letter in small)


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Strong Bruhat order via the sorted-prefix (tableau) criterion."""
    n = max(u.n, v.n)
    a, b = u.padded(n).images, v.padded(n).images
    for k in range(1, n):
        if any(x > y for x, y in zip(sorted(a[:k]), sorted(b[:k]))):
            return False
    return True


def bruhat_leq_by_subwords(u: Permutation, v: Permutation) -> bool:
    """Reference definition: some reduced word of u is a subword of one of v."""
    big_words = all_reduced_words(v)
    return any(is_subword(w, big) for w in all_reduced_words(u) for big in big_words)


def lower_interval(v: Permutation) -> frozenset[Permutation]:
    """All u <= v, built one letter at a time from a reduced word of v.

    If ``v = s_i v'`` with ``l(v) = l(v') + 1`` then the interval below v is
    ``{g, s_i g : g <= v', l(s_i g) = l(g) + 1}``.
    """
    if v.trimmed().n > MAX_EXHAUSTIVE_N:
        raise ReducedWordLimitError(f"lower_interval is limited to n <= {MAX_EXHAUSTIVE_N}")
    n = v.n
    interval = {Permutation.identity(n)}
    for i in reversed(some_reduced_word(v)):
        s = Permutation.simple(i, n)
        grown = set(interval)
        for g in interval:
            sg = compose(s, g)
            if sg.length() == g.length() + 1:
                grown.add(sg)
        interval = grown
    return frozenset(interval)


def symmetric_group(n: int) -> list[Permutation]:
    return [Permutation(images) for images in permutations(range(1, n + 1))]
