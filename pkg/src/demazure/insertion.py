"""Insertion into fillings, column and row words, and recording tableaux.

Words are written as digit strings with ``|`` between segments:

>>> w = parse_word("886531|97643|9764|5|6")
>>> format_word(column_to_row(w))
'13689|589|467|357|46|6'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import Permutation
from .ssaf import SSAF, Cell, reading_order

Segments = tuple[tuple[int, ...], ...]


class NotAColumnWord(ValueError):
    pass


class PatternMismatch(ValueError):
    """The requested twisted Knuth move does not apply at this position."""


# ---------------------------------------------------------------- word text


def parse_word(text: str) -> Segments:
    """``"886531|97643"`` or, for letters above 9, ``"10,3|4"``."""
    segments = []
    for chunk in text.strip().split("|"):
        chunk = chunk.strip()
        if "," in chunk:
            letters = tuple(int(t) for t in chunk.split(","))
        else:
            letters = tuple(int(ch) for ch in chunk)
        if any(v < 1 for v in letters):
            raise ValueError(f"letters must be positive: {text!r}")
        segments.append(letters)
    return tuple(s for s in segments if s)


def format_word(segments: Sequence[Sequence[int]]) -> str:
    wide = any(v > 9 for seg in segments for v in seg)
    sep = "," if wide else ""
    return "|".join(sep.join(str(v) for v in seg) for seg in segments)


def flatten(segments: Iterable[Sequence[int]]) -> tuple[int, ...]:
    return tuple(v for seg in segments for v in seg)


def _lengths_ok(segments: Segments) -> bool:
    lengths = [len(s) for s in segments]
    return all(n > 0 for n in lengths) and all(a >= b for a, b in zip(lengths, lengths[1:]))


def is_column_word(segments: Segments) -> bool:
    if not _lengths_ok(segments):
        return False
    if any(any(a < b for a, b in zip(s, s[1:])) for s in segments):
        return False
    for lower, upper in zip(segments, segments[1:]):
        # tail-aligned: the j-th letter from the end must strictly increase
        if any(upper[-1 - j] <= lower[-1 - j] for j in range(len(upper))):
            return False
    return True


def is_row_word(segments: Segments) -> bool:
    if not _lengths_ok(segments):
        return False
    if any(any(a >= b for a, b in zip(s, s[1:])) for s in segments):
        return False
    for lower, upper in zip(segments, segments[1:]):
        if any(upper[-1 - j] > lower[-1 - j] for j in range(len(upper))):
            return False
    return True


# ---------------------------------------------------------------- insertion


class _Grid:
    """Mutable working copy of a filling during insertion."""

    def __init__(self, F: SSAF):
        self.basement = F.basement
        self.cols = [list(c) for c in F.columns]

    def value(self, col: int, row: int) -> int:
        if row == 0:
            return self.basement(col)
        c = self.cols[col - 1]
        return c[row - 1] if row <= len(c) else 0

    def insert(self, c: int) -> Cell:
        k = self.basement.n
        if not 1 <= c <= k:
            raise ValueError(f"letter {c} outside basement range 1..{k}")
        order = reading_order([len(col) for col in self.cols])
        start = 0
        while True:
            for pos in range(start, len(order)):
                col, row = order[pos]
                above = self.value(col, row + 1)
                if above < c <= self.value(col, row):
                    break
            else:  # pragma: no cover - the basement always offers a landing cell
                raise RuntimeError(f"no cell accepts {c}")
            column = self.cols[col - 1]
            if row == len(column):
                column.append(c)
                return (col, row + 1)
            column[row], c = c, column[row]
            start = pos + 1

    def freeze(self) -> SSAF:
        return SSAF(self.basement, tuple(tuple(c) for c in self.cols))


def insert(F: SSAF, c: int) -> SSAF:
    grid = _Grid(F)
    grid.insert(c)
    return grid.freeze()


def insert_word(F: SSAF, word: Iterable[int] | Segments) -> SSAF:
    grid = _Grid(F)
    for c in _letters(word):
        grid.insert(c)
    return grid.freeze()


def _letters(word: Iterable) -> tuple[int, ...]:
    word = tuple(word)
    if word and isinstance(word[0], tuple):
        return flatten(word)
    return word


def filling_of(word: Iterable[int] | Segments, n: int | None = None) -> SSAF:
    """Insert a word into the empty filling over the identity basement."""
    letters = _letters(word)
    n = max(letters, default=1) if n is None else n
    return insert_word(SSAF.empty(Permutation.identity(n)), letters)


def row_word(F: SSAF) -> Segments:
    """Rows from the bottom up (basement excluded), each read in increasing order."""
    top = max(F.shape, default=0)
    rows = []
    for r in range(1, top + 1):
        rows.append(tuple(sorted(F.entry(i, r) for i in range(1, F.k + 1) if r <= F.shape[i - 1])))
    return tuple(rows)


# ---------------------------------------------------------------- rewriting


def twisted_knuth_step(word: Sequence[int], position: int, variant: int) -> tuple[int, ...]:
    """Rewrite the three letters starting at 0-based ``position``.

    Variant 1 relates ``b a c`` and ``b c a`` when c <= b < a; variant 2 relates
    ``a c b`` and ``c a b`` when c < b <= a.  Either side may be given.
    """
    w = tuple(word)
    if not 0 <= position <= len(w) - 3:
        raise PatternMismatch(f"position {position} out of range for a word of length {len(w)}")
    x, y, z = w[position:position + 3]
    if variant == 1:
        if y <= x < z:  # b c a -> b a c, here (x, y, z) = (b, c, a)
            new = (x, z, y)
        elif z <= x < y:  # b a c -> b c a
            new = (x, z, y)
        else:
            raise PatternMismatch(f"variant 1 does not apply to {x}{y}{z}")
    elif variant == 2:
        if x < z <= y:  # c a b -> a c b
            new = (y, x, z)
        elif y < z <= x:  # a c b -> c a b
            new = (y, x, z)
        else:
            raise PatternMismatch(f"variant 2 does not apply to {x}{y}{z}")
    else:
        raise ValueError(f"unknown variant {variant}")
    return w[:position] + new + w[position + 3:]


def applicable_moves(word: Sequence[int]) -> list[tuple[int, int]]:
    moves = []
    for pos in range(len(word) - 2):
        for variant in (1, 2):
            try:
                twisted_knuth_step(word, pos, variant)
            except PatternMismatch:
                continue
            moves.append((pos, variant))
    return moves


# ---------------------------------------------------------------- column -> row


def _extract_first_row(segments: list[list[int]]) -> tuple[tuple[int, ...], list[list[int]]]:
    """Pull the first row out of a column word.

    Starting from the last segment, its head letter is carried leftward: in
    each earlier segment it replaces the leftmost letter it exceeds, and the
    replaced letter is carried on.  The letter left over after segment 1 is
    the next row entry.
    """
    segs = [list(s) for s in segments]
    carried = []
    for last in range(len(segs) - 1, 0, -1):
        x = segs[last].pop(0)
        for idx in range(last - 1, -1, -1):
            seg = segs[idx]
            for j, a in enumerate(seg):
                if x > a:
                    seg[j], x = x, a
                    break
        carried.append(x)
    carried.append(segs[0].pop(0))
    return tuple(carried), [s for s in segs if s]


def column_to_row_stages(segments: Segments) -> list[tuple[tuple[int, ...], Segments]]:
    """Each extracted row with the column word remaining after it."""
    if not is_column_word(tuple(tuple(s) for s in segments)):
        raise NotAColumnWord(format_word(segments))
    stages = []
    rest = [list(s) for s in segments]
    while rest:
        row, rest = _extract_first_row(rest)
        stages.append((row, tuple(tuple(s) for s in rest)))
    return stages


def bubbled_first_stage(segments: Segments) -> Segments:
    """The first extraction written as the row followed by the bubbled segments."""
    row, _ = _extract_first_row([list(s) for s in segments])
    segs = [list(s) for s in segments]
    for last in range(len(segs) - 1, 0, -1):
        x = segs[last].pop(0)
        for idx in range(last - 1, -1, -1):
            for j, a in enumerate(segs[idx]):
                if x > a:
                    segs[idx][j], x = x, a
                    break
    return ((row[:-1]),) + tuple(tuple(s) for s in segs if s)


def column_to_row(segments: Segments) -> Segments:
    return tuple(row for row, _ in column_to_row_stages(segments))


# ---------------------------------------------------------------- recording


@dataclass(frozen=True)
class Biword:
    upper: tuple[int, ...]
    lower: tuple[int, ...]

    def __post_init__(self):
        if len(self.upper) != len(self.lower):
            raise ValueError("biword rows must have equal length")

    def __str__(self) -> str:
        width = max((len(str(v)) for v in self.upper + self.lower), default=1)
        top = " ".join(str(v).rjust(width) for v in self.upper)
        bottom = " ".join(str(v).rjust(width) for v in self.lower)
        return f"{top}\n{bottom}"


RecordingTableau = dict[Cell, int]


def insert_with_recording(U: SSAF, W: Biword) -> tuple[SSAF, RecordingTableau]:
    grid = _Grid(U)
    record: RecordingTableau = {}
    for label, letter in zip(W.upper, W.lower):
        record[grid.insert(letter)] = label
    return grid.freeze(), record


def column_biword(segments: Segments) -> Biword:
    """Segment i of k segments is labelled k + 1 - i."""
    k = len(segments)
    upper = tuple(k - i for i, seg in enumerate(segments) for _ in seg)
    return Biword(upper, flatten(segments))


def row_biword(rows: Segments) -> Biword:
    """Row i (from the bottom) is labelled i."""
    upper = tuple(i for i, seg in enumerate(rows, start=1) for _ in seg)
    return Biword(upper, flatten(rows))


def partition_filling(lam: Sequence[int], n: int) -> SSAF:
    """The unique filling of partition shape over the identity basement."""
    lam = tuple(lam) + (0,) * (n - len(lam))
    return SSAF(Permutation.identity(n), tuple((i,) * part for i, part in enumerate(lam, start=1)))


def column_words(max_letter: int, max_length: int) -> list[Segments]:
    """All column words with letters <= max_letter and at most max_length letters."""
    out: list[Segments] = []

    def decreasing(length: int, top: int) -> Iterable[tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for first in range(top, 0, -1):
            for rest in decreasing(length - 1, first):
                yield (first,) + rest

    def extend(segs: list[tuple[int, ...]], used: int) -> None:
        if segs:
            out.append(tuple(segs))
        prev = segs[-1] if segs else None
        cap = len(prev) if prev else max_length
        for length in range(1, min(cap, max_length - used) + 1):
            for seg in decreasing(length, max_letter):
                if prev is not None and any(seg[-1 - j] <= prev[-1 - j] for j in range(length)):
                    continue
                segs.append(seg)
                extend(segs, used + length)
                segs.pop()

    extend([], 0)
    return out
