import pytest
from hypothesis import given, strategies as st

from demazure.perm import (
    Permutation,
    ReducedWordLimitError,
    all_reduced_words,
    bruhat_leq,
    bruhat_leq_by_subwords,
    compose,
    evaluate_word,
    is_subword,
    length,
    lower_interval,
    some_reduced_word,
    symmetric_group,
)

perms4 = st.permutations([1, 2, 3, 4]).map(Permutation)


def test_parse_and_print():
    p = Permutation.parse("312")
    assert str(p) == "312"
    assert p(1) == 3 and p(2) == 1
    assert str(Permutation.longest(3)) == "321"


def test_parse_rejects_non_permutations():
    with pytest.raises(ValueError):
        Permutation.parse("112")


def test_known_reduced_words():
    assert some_reduced_word(Permutation.parse("312")) == (2, 1)
    assert some_reduced_word(Permutation.parse("321")) == (2, 1, 2)
    assert some_reduced_word(Permutation.identity(4)) == ()
    assert all_reduced_words(Permutation.parse("321")) == {(1, 2, 1), (2, 1, 2)}


def test_reduced_word_limit():
    with pytest.raises(ReducedWordLimitError):
        all_reduced_words(Permutation.longest(8))


def test_symmetric_group_sizes():
    assert [len(symmetric_group(n)) for n in range(1, 6)] == [1, 2, 6, 24, 120]


@given(perms4, perms4)
def test_compose_is_function_composition(p, q):
    r = compose(p, q)
    assert all(r(j) == p(q(j)) for j in range(1, 5))


@given(perms4)
def test_reduced_word_evaluates_back(p):
    word = some_reduced_word(p)
    assert len(word) == length(p) == p.inversions()
    assert evaluate_word(word, 4) == p
    assert all(evaluate_word(w, 4) == p for w in all_reduced_words(p))


@given(perms4)
def test_inverse(p):
    assert compose(p, p.inverse()).is_identity()
    assert length(p.inverse()) == length(p)


def test_bruhat_criterion_matches_subwords_on_s4():
    group = symmetric_group(4)
    for u in group:
        for v in group:
            assert bruhat_leq(u, v) == bruhat_leq_by_subwords(u, v)


def test_lower_interval_matches_bruhat():
    group = symmetric_group(4)
    for v in group:
        assert lower_interval(v) == frozenset(u for u in group if bruhat_leq(u, v))
    assert len(lower_interval(Permutation.longest(4))) == 24
    assert lower_interval(Permutation.identity(3)) == {Permutation.identity(3)}


def test_is_subword():
    assert is_subword((1, 2), (2, 1, 2))
    assert not is_subword((1, 1), (2, 1, 2))
    assert is_subword((), (1,))


def test_left_descents():
    assert Permutation.longest(3).left_descents() == [1, 2]
    assert Permutation.identity(3).left_descents() == []
