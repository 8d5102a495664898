import pytest

from demazure.poly import Polynomial, pi, theta
from demazure.polytope import (
    CSV_HEADER,
    LatticeCloud,
    NegativeCoefficient,
    cloud_of,
    emit,
    format_for,
    project,
    region_of,
    to_csv,
    to_svg,
)
from demazure.products import THETA_LABELS, pi_word, theta_word, x
from demazure.ssaf import key


def test_clouds():
    assert cloud_of(x(4, 2, 0)).points == {(4, 2, 0): 1}
    assert cloud_of(Polynomial.constant(1)).points == {(0, 0, 0): 1}
    seg = cloud_of(pi(1, x(5, 2, 0)))
    assert seg.points == {(5 - t, 2 + t, 0): 1 for t in range(4)}
    with pytest.raises(NegativeCoefficient):
        cloud_of(x(1, 0, 0) - x(0, 1, 0))
    with pytest.raises(ValueError):
        cloud_of(Polynomial.variable(4))


def test_regions():
    assert region_of((3, 1, 0)) == {"R1"}
    assert region_of((1, 3, 0)) == {"R3"}
    assert region_of((2, 2, 2)) == {"R1", "R2", "R3", "R4", "R5", "R6"}
    assert region_of((2, 2, 0)) == {"R1", "R3"}


def test_projection():
    assert project((2, 2, 2)) == (0, 0)
    assert project((5, 2, 0)) == (3, 7) and project((2, 5, 0)) == (-3, 7)
    for d in range(11):
        pts = [(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a)]
        assert len({project(p) for p in pts}) == len(pts)


def test_laws():
    for m in range(9):
        for n in range(m + 1):
            lam = x(m, n, 0)
            assert cloud_of(pi_word("21", lam)).touches({"R5", "R6"}) == (m >= 2 * n)
            full = cloud_of(pi_word("121", lam))
            assert full.max_multiplicity() == (n + 1 if m >= 2 * n else m - n + 1)
            if m > n:
                want = n if m >= 2 * n else m - n
                assert cloud_of(theta_word("121", lam)).max_multiplicity() == want
            union = LatticeCloud()
            for label in THETA_LABELS:
                union = union + cloud_of(theta_word(label, lam))
            assert union == full
            for p, mult in full.points.items():
                for q in ((p[1], p[0], p[2]), (p[0], p[2], p[1]), (p[2], p[1], p[0])):
                    assert full.points[q] == mult


def test_csv(tmp_path):
    assert to_csv(LatticeCloud()) == ",".join(CSV_HEADER) + "\n"
    rows = to_csv(cloud_of(key((3, 0, 1)))).splitlines()
    assert rows[1:] == ["3,1,0,2,4,1,R1", "3,0,1,3,1,1,R2"]
    path = tmp_path / "k.csv"
    emit(cloud_of(key((3, 0, 1))), "csv", str(path))
    assert path.read_text().count("\n") == 3


def test_svg_is_stable(tmp_path):
    cloud = cloud_of(theta(2, x(3, 1, 0)) + x(3, 1, 0))
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    emit(cloud, "svg", str(a))
    emit(LatticeCloud(dict(reversed(list(cloud.points.items())))), "svg", str(b))
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.count("<circle") == 2 and text.count("<line") == 3
    assert to_svg(LatticeCloud()).endswith("</svg>\n")


def test_format_choice():
    assert format_for("out.SVG") == "svg"
    assert format_for("out.csv") == "csv"
    with pytest.raises(ValueError):
        emit(LatticeCloud(), "png", "unused")
