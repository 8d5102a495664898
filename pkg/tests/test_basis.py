import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import random_polynomial

from demazure.basis import (
    AtomExpansion,
    KeyExpansion,
    atoms_to_keys,
    expand,
    expand_atoms,
    expand_atoms_greedy,
    expand_atoms_linear,
    expand_keys,
    from_terms,
    is_atom_positive,
    is_key_positive,
    key_atom_support,
    keys_to_atoms,
)
from demazure.poly import Polynomial, parse_polynomial
from demazure.shape import compositions
from demazure.ssaf import atom, key

small_polys = st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * 3), st.integers(-3, 3).filter(bool), max_size=5
).map(lambda t: Polynomial(t, 3))


def test_key_support_golden():
    assert key_atom_support((3, 0, 1)) == {(3, 1, 0), (3, 0, 1)}
    assert str(expand_atoms(key((3, 0, 1)))) == "A(3,1,0) + A(3,0,1)"


def test_key_support_matches_atom_expansion():
    for d in range(6):
        for gamma in compositions(d, 4):
            e = expand_atoms(key(gamma), 4)
            assert set(e.coeffs) == key_atom_support(gamma)
            assert set(e.coeffs.values()) == {1}


low_degree = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 3), st.integers(-3, 3).filter(bool), max_size=4
).map(lambda t: Polynomial(t, 3))


@settings(max_examples=30, deadline=None)
@given(low_degree)
def test_greedy_and_linear_solve_agree(f):
    greedy = expand_atoms_greedy(f, 3)
    assert greedy is not None
    assert greedy == expand_atoms_linear(f, 3)
    assert greedy.polynomial() == f


@settings(max_examples=60, deadline=None)
@given(small_polys)
def test_key_round_trip(f):
    keys = expand_keys(f, 3)
    assert keys.polynomial() == f
    assert keys_to_atoms(keys) == expand_atoms(f, 3)


def test_random_four_variable_round_trip():
    rng = random.Random(3)
    for _ in range(40):
        f = random_polynomial(rng, 4, 5)
        assert expand_atoms(f, 4).polynomial() == f
        assert expand_keys(f, 4).polynomial() == f


def test_positivity_flags():
    f = key((0, 2)) * key((1, 0, 2))
    assert is_atom_positive(f, 3)
    assert not is_key_positive(f, 3)
    assert expand_keys(f, 3).min_coefficient() == -1


def test_signed_expansion():
    assert str(atoms_to_keys(expand_atoms(Polynomial.variable(2)))) == "-K(1,0) + K(0,1)"
    assert str(expand(parse_polynomial("x2"), "atom")) == "A(0,1)"
    assert str(expand(Polynomial.zero(2), "key")) == "0"
    with pytest.raises(ValueError):
        expand(Polynomial.constant(1), "schur")


def test_expansion_values():
    e = from_terms([(2, (1, 0)), (-1, (0, 1)), (1, (1, 0))], "atom", 2)
    assert isinstance(e, AtomExpansion)
    assert e.coeffs == {(1, 0): 3, (0, 1): -1}
    assert str(e) == "3*A(1,0) - A(0,1)"
    assert e.polynomial() == 3 * atom((1, 0)) - atom((0, 1))
    k = from_terms([(1, (0, 1))], "key", 2)
    assert isinstance(k, KeyExpansion) and k != e
