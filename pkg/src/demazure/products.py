"""Products of atoms, keys and Schur polynomials, and the three-variable closed forms.

Operator words follow ``poly``: ``"21"`` means theta_2 theta_1, so theta_1 acts
first.  Three-variable products are organised by the word of the theta
operator each atom carries:

>>> from demazure.ssaf import key
>>> d = theta_decompose(key((3, 0, 1)))
>>> {label: str(p) for label, p in d.components.items() if p}
{'': 'x1^3*x2', '2': 'x1^3*x2'}
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .basis import Expansion, KeyExpansion, expand, expand_atoms, expand_keys, keys_to_atoms
from .poly import Polynomial, apply_letters, theta, total
from .shape import (
    WeakComposition,
    bounded_compositions,
    compositions,
    format_composition,
    omega,
    pad,
    partitions,
    reverse,
    sort_desc,
)
from .ssaf import atom, key

THETA_LABELS = ("", "1", "2", "12", "21", "121")

_LABEL_OF_INVERSE = {
    "123": "",
    "213": "1",
    "132": "2",
    "312": "21",
    "231": "12",
    "321": "121",
}


def word(label: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in label)


def x(*exps: int) -> Polynomial:
    return Polynomial.monomial(exps)


def pi_word(label: str, f: Polynomial) -> Polynomial:
    return apply_letters("pi", word(label), f)


def theta_word(label: str, f: Polynomial) -> Polynomial:
    return apply_letters("theta", word(label), f)


# ---------------------------------------------------------------- products


def product_expand(f: Polynomial, g: Polynomial, target: str, nvars: int | None = None) -> Expansion:
    return expand(f * g, target, nvars)


def schur(lam: Sequence[int], nvars: int) -> Polynomial:
    """The key of the reversed partition, which is symmetric in all nvars variables."""
    lam = pad(tuple(lam), nvars)
    return key(reverse(lam))


def key_times_schur(gamma: Sequence[int], lam: Sequence[int]) -> KeyExpansion:
    gamma = tuple(gamma)
    return expand_keys(key(gamma) * schur(lam, len(gamma)), len(gamma))


# ---------------------------------------------------------------- theta form


@dataclass(frozen=True)
class ThetaDecomposition:
    components: dict[str, Polynomial]

    def reconstruct(self) -> Polynomial:
        return total((theta_word(label, p) for label, p in self.components.items()), 3)

    def __getitem__(self, label: str) -> Polynomial:
        return self.components.get(label, Polynomial.zero(3))

    def is_dominating_positive(self) -> bool:
        return all(c >= 0 for p in self.components.values() for _, c in p.items())


def theta_label(beta: WeakComposition) -> str:
    return _LABEL_OF_INVERSE[str(omega(tuple(beta)).inverse())]


def theta_decompose(f: Polynomial) -> ThetaDecomposition:
    """Regroup the atom expansion of f by the theta word carried by each atom."""
    if f.nvars > 3 and any(any(e[3:]) for e, _ in f.items()):
        raise ValueError("theta decomposition is defined for three variables")
    f = Polynomial(f.terms, 3)
    components: dict[str, dict[WeakComposition, int]] = {label: {} for label in THETA_LABELS}
    for beta, c in expand_atoms(f, 3).coeffs.items():
        comp = components[theta_label(beta)]
        lam = sort_desc(beta)
        comp[lam] = comp.get(lam, 0) + c
    return ThetaDecomposition({label: Polynomial(terms, 3) for label, terms in components.items()})


# ---------------------------------------------------------------- closed forms


@dataclass(frozen=True)
class ClosedFormParams:
    m: int
    n: int
    k: int
    l: int

    def __post_init__(self):
        if not (self.m >= self.n >= 0 and self.k >= self.l >= 0):
            raise ValueError(f"need m >= n >= 0 and k >= l >= 0, got {self}")


def closed_form_grid(bound: int) -> list[ClosedFormParams]:
    return [
        ClosedFormParams(m, n, k, l)
        for m in range(bound + 1)
        for n in range(m + 1)
        for k in range(bound + 1)
        for l in range(k + 1)
    ]


def _sum(polys: Iterable[Polynomial]) -> Polynomial:
    return total(polys, 3)


@lru_cache(maxsize=None)
def dominant_times_full_key(m: int, n: int, k: int, l: int) -> ThetaDecomposition:
    """The theta form of x1^m x2^n times pi_121(x1^k x2^l)."""
    return theta_decompose(x(m, n, 0) * pi_word("121", x(k, l, 0)))


def closed_form_71(p: ClosedFormParams) -> Polynomial:
    """pi_1(x1^m x2^n) * pi_2(x1^k x2^l) assembled from its three summands."""
    m, n, k, l = p.m, p.n, p.k, p.l
    out = _sum(
        x(m + k - s, n + l + s - t, t)
        for s in range(min(m - n, k) + 1)
        for t in range(max(0, s - (k - l)), min(l, s + n) + 1)
    )
    if m - n > k - l:
        out += _sum(theta(1, x(m + l - t, k + n, t)) for t in range(min(l, (m - n) - (k - l)) + 1))
    if l > n:
        out += _sum(theta(2, x(m + k - s, l, n + s)) for s in range(min(l - n, m - n) + 1))
    return out


def closed_form_72(p: ClosedFormParams, dominating_only: bool = True) -> Polynomial:
    """pi_1(x1^m x2^n) * pi_21(x1^k x2^l).

    The theta_1 part is a sum over dominating monomials.  The printed bounds
    also admit exponents with x1 below x2; ``dominating_only=False`` keeps them
    and then disagrees with the product on part of the grid.
    """
    m, n, k, l = p.m, p.n, p.k, p.l
    A = dominant_times_full_key(m, n, k, l)
    out = A[""] + theta_word("2", A["2"]) + theta_word("21", A["21"])
    out += _sum(
        theta(1, x(m + k - r, n + l + s, r - s))
        for r in range(min(m, k) + 1)
        for s in range(max(0, r - (n + l)), min(r, m - n, k - l) + 1)
        if m + k - r > n + l + s or not dominating_only
    )
    if min(m, k) >= n + l:
        out += _sum(
            theta_word("12", x(m + k - r, r, n + l)) for r in range(n + l + 1, min(m, k) + 1)
        )
    if k > m > n + l:
        out += theta_word("121", x(k, m, n + l))
    return out


def closed_form_73(p: ClosedFormParams) -> Polynomial:
    """pi_2(x1^m x2^n) * pi_12(x1^k x2^l)."""
    m, n, k, l = p.m, p.n, p.k, p.l
    A = dominant_times_full_key(m, n, k, l)
    out = A[""] + theta_word("1", A["1"]) + theta_word("12", A["12"])
    out += _sum(
        theta(2, x(m + k + n + l - s - r, s, r))
        for r in range(min(m, k) + 1)
        for s in range(max(l, n, r, (n + l) - r), min(n + l, m + k - r) + 1)
    )
    if n + l >= max(m, k):
        out += _sum(
            theta_word("21", x(n + l, m + k - r, r)) for r in range(m + k - n - l, min(m, k) + 1)
        )
    if n + l > k > m:
        out += theta_word("121", x(n + l, k, m))
    return out


def closed_form_74(p: ClosedFormParams) -> Polynomial:
    """pi_12(x1^m x2^n) * pi_21(x1^k x2^l), as printed.

    The indicator gates only the theta_12 term.  This assembly does not match
    the direct product on most of the grid: its theta_12 and theta_121 parts
    disagree with the product's own decomposition (see ``closed_form_gap``).
    """
    m, n, k, l = p.m, p.n, p.k, p.l
    A = dominant_times_full_key(m, n, k, l)
    out = A[""] + theta_word("1", A[""]) + theta_word("2", A[""]) + theta_word("21", A["1"])
    if m + l > k > n:
        out += theta_word("12", A["2"])
    out += _sum(theta_word("121", x(m + l - t, k, n + t)) for t in range(min(m - n, l) + 1))
    return out


CLOSED_FORMS: dict[str, tuple[Callable[[ClosedFormParams], Polynomial], str, str]] = {
    "pi1*pi2": (closed_form_71, "1", "2"),
    "pi1*pi21": (closed_form_72, "1", "21"),
    "pi2*pi12": (closed_form_73, "2", "12"),
    "pi12*pi21": (closed_form_74, "12", "21"),
}


def closed_form_oracle(name: str, p: ClosedFormParams) -> Polynomial:
    """The product the closed form describes, computed directly from operators."""
    _, left, right = CLOSED_FORMS[name]
    return pi_word(left, x(p.m, p.n, 0)) * pi_word(right, x(p.k, p.l, 0))


def closed_form_gap(name: str, p: ClosedFormParams) -> list[str]:
    """Theta labels whose components differ between the closed form and the product."""
    fn = CLOSED_FORMS[name][0]
    got, want = theta_decompose(fn(p)), theta_decompose(closed_form_oracle(name, p))
    return [label for label in THETA_LABELS if got[label] != want[label]]


# ---------------------------------------------------------------- reduction


def reduce_common_rows(alpha: Sequence[int]) -> tuple[int, WeakComposition]:
    """Split off the common factor (x1 x2 x3)^r, r the smallest part."""
    alpha = tuple(alpha)
    if len(alpha) != 3:
        raise ValueError("row reduction is stated for three parts")
    r = min(alpha)
    return r, tuple(a - r for a in alpha)


# ---------------------------------------------------------------- sweeps


@dataclass(frozen=True)
class CaseRecord:
    params: str
    basis: str
    min_coefficient: int
    ok: bool

    @property
    def verdict(self) -> str:
        return "ok" if self.ok else "counterexample"


@dataclass
class SweepReport:
    kind: str
    records: list[CaseRecord]
    note: str = ""

    @property
    def counterexamples(self) -> list[CaseRecord]:
        return [r for r in self.records if not r.ok]

    def summary(self) -> dict:
        out = {
            "kind": self.kind,
            "total_cases": len(self.records),
            "counterexamples": [r.params for r in self.counterexamples],
        }
        if self.note:
            out["note"] = self.note
        return out

    def write_csv(self, path: str) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(["params", "basis", "min_coefficient", "verdict"])
            for r in self.records:
                writer.writerow([r.params, r.basis, r.min_coefficient, r.verdict])

    def write_json(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.summary(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def _fmt(*parts: Sequence[int]) -> str:
    return " ".join(format_composition(p) for p in parts)


def _atom_case(f: Polynomial, params: str) -> CaseRecord:
    e = expand_atoms(f, 3)
    return CaseRecord(params, "atom", e.min_coefficient(), e.is_positive())


def _key_case(f: Polynomial, params: str) -> CaseRecord:
    e = expand_keys(f, 3)
    if e.is_positive() and not keys_to_atoms(e).is_positive():
        raise AssertionError(f"key-positive but not atom-positive: {params}")
    return CaseRecord(params, "key", e.min_coefficient(), e.is_positive())


def monomial_times_atom_case(lam: WeakComposition, alpha: WeakComposition) -> CaseRecord:
    return _atom_case(x(*lam) * atom(alpha), _fmt(lam, alpha))


def monomial_times_key_case(lam: WeakComposition, gamma: WeakComposition) -> CaseRecord:
    return _key_case(x(*lam) * key(gamma), _fmt(lam, gamma))


def key_times_schur_case(gamma: WeakComposition, lam: WeakComposition) -> CaseRecord:
    e = key_times_schur(gamma, lam)
    return CaseRecord(_fmt(gamma, lam), "key", e.min_coefficient(), e.is_positive())


def key_pair_case(gamma: WeakComposition, delta: WeakComposition) -> CaseRecord:
    return _atom_case(key(gamma) * key(delta), _fmt(gamma, delta))


def closed_form_case(name: str, m: int, n: int, k: int, l: int) -> CaseRecord:
    p = ClosedFormParams(m, n, k, l)
    got = CLOSED_FORMS[name][0](p)
    e = expand_atoms(got, 3)
    return CaseRecord(f"{name} {m} {n} {k} {l}", "atom", e.min_coefficient(), got == closed_form_oracle(name, p))


def _small_partitions(bound: int) -> list[WeakComposition]:
    return [lam for d in range(bound + 1) for lam in partitions(d, 3)]


def _small_compositions(bound: int) -> list[WeakComposition]:
    return [a for d in range(bound + 1) for a in compositions(d, 3)]


def reduced_key_pairs(max_part: int) -> list[tuple[WeakComposition, WeakComposition]]:
    """Unordered pairs of row-reduced length-3 compositions with entries at most max_part.

    Every ordered pair with entries at most max_part is one of these times a power
    of x1 x2 x3, which shifts atoms to atoms.
    """
    reduced = sorted({reduce_common_rows(a)[1] for a in bounded_compositions(3, max_part)}, reverse=True)
    return [(g, d) for i, g in enumerate(reduced) for d in reduced[i:]]


def sweep_cases(kind: str, bound: int) -> list[tuple[Callable[..., CaseRecord], tuple]]:
    if kind == "thm413":
        return [(monomial_times_atom_case, (lam, a)) for lam in _small_partitions(bound) for a in _small_compositions(bound)]
    if kind == "thm415":
        return [(monomial_times_key_case, (lam, g)) for lam in _small_partitions(bound) for g in _small_compositions(bound)]
    if kind == "thm418":
        lams = _small_partitions(max(bound - 1, 0))
        return [(key_times_schur_case, (g, lam)) for g in _small_compositions(bound) for lam in lams]
    if kind == "conjecture":
        return [(key_pair_case, pair) for pair in reduced_key_pairs(bound)]
    if kind == "closedforms":
        return [
            (closed_form_case, (name, p.m, p.n, p.k, p.l))
            for name in CLOSED_FORMS
            for p in closed_form_grid(bound)
        ]
    raise ValueError(f"unknown sweep {kind!r}")


SWEEP_KINDS = ("thm413", "thm415", "thm418", "conjecture", "closedforms")


def _call(job: tuple[Callable[..., CaseRecord], tuple]) -> CaseRecord:
    fn, args = job
    return fn(*args)


def run_sweep(kind: str, bound: int, jobs: int = 1) -> SweepReport:
    """Run every case of a sweep; ``jobs > 1`` spreads cases over worker processes.

    For thm418 the Schur index ranges over weights below ``bound``.
    """
    cases = sweep_cases(kind, bound)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_call, cases, chunksize=max(1, len(cases) // (4 * jobs))))
    else:
        records = [_call(c) for c in cases]
    note = ""
    if kind == "conjecture":
        note = f"{len(records)} unordered reduced pairs cover {(bound + 1) ** 6} ordered pairs"
    return SweepReport(kind, records, note)


def conjecture_sweep(max_part: int, jobs: int = 1) -> SweepReport:
    return run_sweep("conjecture", max_part, jobs)
