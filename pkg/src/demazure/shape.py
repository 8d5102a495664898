"""Weak compositions, partitions and the sorting permutation.

Compositions are plain tuples of nonnegative integers.  ``omega(alpha)`` is the
shortest permutation with ``alpha[i-1] == sorted_shape[omega(i) - 1]``:

>>> str(omega((1, 0, 3)))
'231'
>>> sort_desc((1, 0, 3))
(3, 1, 0)
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .perm import Permutation, bruhat_leq

WeakComposition = tuple[int, ...]
Partition = tuple[int, ...]


class IncomparableShapes(ValueError):
    """Two compositions are not rearrangements of one partition."""


def composition(parts: Iterable[int]) -> WeakComposition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    return parts


def size(alpha: Sequence[int]) -> int:
    return sum(alpha)


def is_partition(alpha: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(alpha, alpha[1:]))


def sort_desc(alpha: Sequence[int]) -> Partition:
    return tuple(sorted(alpha, reverse=True))


def reverse(alpha: Sequence[int]) -> WeakComposition:
    return tuple(reversed(alpha))


def pad(alpha: Sequence[int], k: int) -> WeakComposition:
    return tuple(alpha) + (0,) * (k - len(alpha))


@lru_cache(maxsize=None)
def omega(alpha: WeakComposition) -> Permutation:
    """Stable-sort rank map: position i of alpha holds the omega(i)-th largest part."""
    alpha = tuple(alpha)
    if not alpha:
        return Permutation((1,))
    order = sorted(range(len(alpha)), key=lambda i: -alpha[i])
    images = [0] * len(alpha)
    for rank, i in enumerate(order, start=1):
        images[i] = rank
    return Permutation(tuple(images))


def comp_leq(alpha: WeakComposition, beta: WeakComposition) -> bool:
    """True when beta >= alpha, i.e. omega(beta) <= omega(alpha) in Bruhat order."""
    if sort_desc(alpha) != sort_desc(beta):
        raise IncomparableShapes(f"{format_composition(alpha)} and {format_composition(beta)}")
    return bruhat_leq(omega(tuple(beta)), omega(tuple(alpha)))


def rearrangements(lam: Sequence[int]) -> list[WeakComposition]:
    """Distinct rearrangements of ``lam`` in lexicographically decreasing order."""
    counts: dict[int, int] = {}
    for part in lam:
        counts[part] = counts.get(part, 0) + 1
    values = sorted(counts, reverse=True)
    out: list[WeakComposition] = []

    def build(prefix: list[int], remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                build(prefix, remaining - 1)
                prefix.pop()
                counts[v] += 1

    build([], len(lam))
    return out


def compositions(total: int, k: int) -> Iterator[WeakComposition]:
    """Weak compositions of ``total`` into exactly ``k`` parts."""
    if k == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, k - 1):
            yield (first,) + rest


def compositions_up_to(max_total: int, k: int) -> Iterator[WeakComposition]:
    for total in range(max_total + 1):
        yield from compositions(total, k)


def bounded_compositions(k: int, max_part: int) -> Iterator[WeakComposition]:
    return (tuple(p) for p in product(range(max_part + 1), repeat=k))


def partitions(total: int, max_parts: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``total`` with at most ``max_parts`` nonzero parts, zero-padded."""
    max_part = total if max_part is None else max_part
    if total == 0:
        yield (0,) * max_parts
        return
    if max_parts == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


_COMPOSITION_RE = re.compile(r"^\(?\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*\)?$")


def parse_composition(text: str) -> WeakComposition:
    """Parse ``"(1,0,3)"``; bare comma lists are accepted too."""
    text = text.strip()
    if not _COMPOSITION_RE.match(text):
        raise ValueError(f"cannot parse composition {text!r}")
    body = text.strip("() ")
    if not body:
        return ()
    return composition(int(tok) for tok in body.split(",") if tok.strip())


def format_composition(alpha: Sequence[int]) -> str:
    return "(" + ",".join(str(a) for a in alpha) + ")"
