import pytest
from hypothesis import given, strategies as st

from demazure.shape import (
    bounded_compositions,
    comp_leq,
    composition,
    compositions,
    format_composition,
    is_partition,
    omega,
    pad,
    parse_composition,
    partitions,
    rearrangements,
    reverse,
    sort_desc,
)

comps = st.lists(st.integers(0, 4), min_size=1, max_size=5).map(tuple)


def test_omega_golden():
    assert str(omega((1, 0, 3))) == "231"
    assert omega((3, 1, 0)).is_identity()


@given(comps)
def test_omega_places_sorted_parts(alpha):
    lam = sort_desc(alpha)
    w = omega(alpha)
    assert all(alpha[i - 1] == lam[w(i) - 1] for i in range(1, len(alpha) + 1))


@given(comps)
def test_omega_is_shortest(alpha):
    # equal parts keep their relative order, so no inversion sits between equal parts
    w = omega(alpha)
    for i in range(len(alpha)):
        for j in range(i + 1, len(alpha)):
            if alpha[i] == alpha[j]:
                assert w(i + 1) < w(j + 1)


def test_rearrangements():
    assert rearrangements((2, 1, 0)) == [(2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 0, 2), (0, 2, 1), (0, 1, 2)]
    assert rearrangements((1, 1, 0)) == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]


def test_counts():
    assert len(list(compositions(6, 4))) == 84
    assert sum(len(list(compositions(d, 4))) for d in range(7)) == 210
    assert len(list(bounded_compositions(3, 3))) == 64
    assert list(partitions(4, 3)) == [(4, 0, 0), (3, 1, 0), (2, 2, 0), (2, 1, 1)]


def test_comp_leq():
    assert comp_leq((0, 1), (1, 0))
    assert not comp_leq((1, 0), (0, 1))


def test_helpers():
    assert reverse((1, 0, 3)) == (3, 0, 1)
    assert pad((1,), 3) == (1, 0, 0)
    assert is_partition((3, 1, 1, 0)) and not is_partition((1, 3))


def test_text_round_trip():
    assert parse_composition("(1,0,3)") == (1, 0, 3)
    assert parse_composition(" 1, 0 ") == (1, 0)
    assert format_composition((1, 0, 3)) == "(1,0,3)"
    with pytest.raises(ValueError):
        parse_composition("(1,-2)")
    with pytest.raises(ValueError):
        composition([1, -1])


def test_omega_of_empty():
    assert omega(()).is_identity()
