import csv
import json
import re
import subprocess
import sys

import pytest

from demazure.cli import EXIT_BUDGET, EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE, UsageError, evaluate, main
from demazure.poly import Polynomial
from demazure.products import x
from demazure.ssaf import atom, key


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_evaluate():
    assert evaluate("x (2,1,0)") == x(2, 1, 0)
    assert evaluate("key (0,2) * key (1,0,2)") == key((0, 2)) * key((1, 0, 2))
    assert evaluate("theta:21 (3,1,0)") == atom((1, 0, 3))
    assert evaluate("(x1 + x2) * atom (0,1)") == (x(1) + x(0, 1)) * atom((0, 1))
    with pytest.raises(UsageError):
        evaluate("key (1,a)")
    with pytest.raises(UsageError):
        evaluate("y1")


def test_atom_and_key(capsys):
    code, out, _ = run(capsys, "atom", "(1,0,3)")
    assert code == EXIT_OK
    assert "operators: x1^2*x2*x3 + x1^2*x3^2 + x1*x2^2*x3 + x1*x2*x3^2 + x1*x3^3" in out
    assert out.count("x1*x3^3") == 2
    code, out, _ = run(capsys, "key", "(3,0,1)")
    assert code == EXIT_OK and "operators: x1^3*x2 + x1^3*x3" in out
    code, out, _ = run(capsys, "atom", "(0)")
    assert code == EXIT_OK and "operators: 1\n" in out
    code, out, _ = run(capsys, "atom", "(1)", "--nvars", "2")
    assert "x1" in out


def test_budget_exit(capsys):
    code, out, err = run(capsys, "atom", "(5,5,5,5,5)")
    assert code == EXIT_BUDGET and "budget" in err
    code, _, _ = run(capsys, "key", "(2,1)", "--budget-cells", "2")
    assert code == EXIT_BUDGET


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--basis", "key", "key (0,2) * key (1,0,2)")
    assert code == EXIT_OK
    assert out.strip() == "-K(4,1,0) + K(4,0,1) - K(3,2,0) + K(3,0,2) + K(2,3,0) + K(1,4,0) + K(1,3,1) + K(1,2,2)"
    code, out, _ = run(capsys, "expand", "--basis", "atom", "x2")
    assert out.strip() == "A(0,1)"


def test_expand_round_trip(capsys):
    text = "3*x1^2*x3 - x2*x3 + 5"
    _, out, _ = run(capsys, "expand", "--nvars", "3", text)
    total = Polynomial.zero(3)
    for sign, coeff, parts in re.findall(r"(-?)\s*(?:(\d+)\*)?A\(([\d,]+)\)", out):
        c = int(coeff or 1) * (-1 if sign else 1)
        total = total + c * atom(tuple(int(t) for t in parts.split(",")))
    assert total == evaluate(text)


def test_usage_errors(capsys):
    assert run(capsys, "atom", "(1,x)")[0] == EXIT_USAGE
    assert run(capsys, "atom", "(1,0,0)", "--nvars", "2")[0] == EXIT_USAGE
    assert run(capsys, "expand", "x1 +")[0] == EXIT_USAGE
    assert run(capsys, "sweep", "thm413", "--max", "2", "--max-part", "2")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == EXIT_USAGE


def test_sweeps(capsys, tmp_path):
    out_prefix = str(tmp_path / "conj")
    code, out, _ = run(capsys, "sweep", "conjecture", "--max-part", "3", "--out", out_prefix)
    assert code == EXIT_OK
    assert json.loads(out)["counterexamples"] == []
    with open(out_prefix + ".csv") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 703 and {r["verdict"] for r in rows} == {"ok"}
    assert json.loads(open(out_prefix + ".json").read())["total_cases"] == 703
    code, out, _ = run(capsys, "sweep", "thm413", "--max", "4", "--jobs", "2")
    assert code == EXIT_OK and json.loads(out)["total_cases"] == 385


def test_closed_form_sweep_flags_counterexamples(capsys):
    code, out, _ = run(capsys, "sweep", "closedforms", "--max", "4")
    summary = json.loads(out)
    assert code == EXIT_COUNTEREXAMPLE
    assert summary["total_cases"] == 900
    assert {c.split()[0] for c in summary["counterexamples"]} == {"pi12*pi21"}


def test_polytope(capsys, tmp_path):
    path = tmp_path / "k.csv"
    assert run(capsys, "polytope", "pi:121 (4,1,0)", str(path))[0] == EXIT_OK
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    assert max(int(r["multiplicity"]) for r in rows) == 2
    svg = tmp_path / "p.svg"
    assert run(capsys, "polytope", "x (2,1,0)", "--out", str(svg))[0] == EXIT_OK
    assert svg.read_text().count("<circle") == 1
    trap = tmp_path / "t.csv"
    run(capsys, "polytope", "theta:21 (3,1,0)", str(trap))
    with open(trap) as fh:
        regions = " ".join(r["regions"] for r in csv.DictReader(fh))
    assert "R5" in regions or "R6" in regions
    assert run(capsys, "polytope", "x1 - x2", str(trap))[0] == EXIT_USAGE
    assert run(capsys, "polytope", "x (1,0,0,1)", str(trap))[0] == EXIT_USAGE
    assert run(capsys, "polytope", "x (1,0,0)")[0] == EXIT_USAGE


def test_deterministic_output(capsys):
    first = run(capsys, "expand", "--basis", "key", "key (1,0,2) * x (1,1,0)")[1]
    assert run(capsys, "expand", "--basis", "key", "key (1,0,2) * x (1,1,0)")[1] == first


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "demazure", "key", "(3,0,1)"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "x1^3*x2 + x1^3*x3" in proc.stdout
