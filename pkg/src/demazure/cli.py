"""Command-line entry point.

Expressions combine ``x (a)``, ``atom (a)``, ``key (g)``, ``pi:WORD (a)`` and
``theta:WORD (a)`` with ``*``; anything else is read as polynomial text such as
``2*x1^2*x3 - x2``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .basis import expand
from .poly import Polynomial, apply_letters, parse_polynomial
from .polytope import NegativeCoefficient, cloud_of, emit, format_for
from .products import SWEEP_KINDS, run_sweep
from .shape import format_composition, pad, parse_composition
from .ssaf import BudgetExceeded, atom_by_fillings, atom_by_operators, key_by_fillings, key_by_operators

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

_FACTOR = re.compile(r"^\s*(x|atom|key|pi:(\d+)|theta:(\d+))\s*(\([^()]*\))\s*$")
_NAMED = re.compile(r"\b(x|atom|key|pi:\d+|theta:\d+)\s*\(")


class UsageError(ValueError):
    pass


def _split_product(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "*" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def _factor(text: str) -> Polynomial:
    m = _FACTOR.match(text)
    if not m:
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        return parse_polynomial(body)
    name, alpha = m.group(1), parse_composition(m.group(4))
    if name == "x":
        return Polynomial.monomial(alpha)
    if name == "atom":
        return atom_by_operators(alpha)
    if name == "key":
        return key_by_operators(alpha)
    kind, digits = ("pi", m.group(2)) if m.group(2) else ("theta", m.group(3))
    letters = tuple(int(ch) for ch in digits)
    width = max(len(alpha), max(letters, default=0) + 1)
    return apply_letters(kind, letters, Polynomial.monomial(pad(alpha, width)))


def evaluate(text: str) -> Polynomial:
    """Evaluate the expression mini-language.

    >>> str(evaluate("key (3,0,1)"))
    'x1^3*x2 + x1^3*x3'
    >>> str(evaluate("x (1,0) * pi:1 (1,0)"))
    'x1^2 + x1*x2'
    """
    try:
        if not _NAMED.search(text):
            return parse_polynomial(text)
        out = Polynomial.constant(1)
        for part in _split_product(text):
            out = out * _factor(part)
        return out
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------- commands


def cmd_shape(args: argparse.Namespace, which: str) -> int:
    alpha = parse_composition(args.shape)
    if args.nvars is not None:
        if args.nvars < len(alpha):
            raise UsageError(f"{format_composition(alpha)} has more than {args.nvars} parts")
        alpha = pad(alpha, args.nvars)
    by_ops, by_fill = (atom_by_operators, atom_by_fillings) if which == "atom" else (key_by_operators, key_by_fillings)
    f = by_ops(alpha)
    print(f"operators: {f}")
    g = by_fill(alpha, args.budget_cells)
    print(f"fillings:  {g}")
    if f != g:
        print("routes disagree", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_expand(args: argparse.Namespace) -> int:
    f = evaluate(args.expr)
    print(expand(f, args.basis, args.nvars))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.max is not None and args.max_part is not None:
        raise UsageError("give only one of --max and --max-part")
    bound = args.max if args.max is not None else args.max_part
    if bound is None:
        bound = 3 if args.kind == "conjecture" else 4
    if bound < 0 or args.jobs < 1:
        raise UsageError("bounds must be nonnegative and --jobs at least 1")
    report = run_sweep(args.kind, bound, args.jobs)
    if args.out:
        report.write_csv(f"{args.out}.csv")
        report.write_json(f"{args.out}.json")
    print(json.dumps(report.summary(), sort_keys=True))
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def cmd_polytope(args: argparse.Namespace) -> int:
    path = args.path or args.out
    if not path:
        raise UsageError("polytope needs an output path")
    f = evaluate(args.expr)
    if f.nvars > 3 and any(any(e[3:]) for e, _ in f.items()):
        raise UsageError("polytope expressions must live in three variables")
    emit(cloud_of(f), format_for(path), path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nvars", type=int, default=None, help="number of variables")
    common.add_argument("--budget-cells", type=int, default=None, help="cell budget for filling enumeration")

    parser = argparse.ArgumentParser(prog="demazure", description="Demazure atoms, keys and their products.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("atom", "key"):
        p = sub.add_parser(name, parents=[common], help=f"compute the {name} by both routes")
        p.add_argument("shape", help='weak composition such as "(1,0,3)"')

    p = sub.add_parser("expand", parents=[common], help="expand an expression in the atom or key basis")
    p.add_argument("expr")
    p.add_argument("--basis", choices=("atom", "key"), default="atom")

    p = sub.add_parser("sweep", parents=[common], help="run an exhaustive positivity sweep")
    p.add_argument("kind", choices=SWEEP_KINDS)
    p.add_argument("--max", type=int, default=None, help="weight or parameter bound")
    p.add_argument("--max-part", type=int, default=None, help="largest part (conjecture sweep)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="write OUT.csv and OUT.json")

    p = sub.add_parser("polytope", parents=[common], help="write the lattice cloud as CSV or SVG")
    p.add_argument("expr")
    p.add_argument("path", nargs="?", default=None)
    p.add_argument("--out", default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("atom", "key"):
            return cmd_shape(args, args.command)
        if args.command == "expand":
            return cmd_expand(args)
        if args.command == "sweep":
            return cmd_sweep(args)
        return cmd_polytope(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, NegativeCoefficient) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
