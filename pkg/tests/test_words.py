import pytest
from hypothesis import given

from braidrev.words import (
    ALPHABETIC, NUMERIC, BraidError, BraidWord, Move, MONOTONE, FAR, NEAR,
    cancel_moves, exponent_sum, format_word, free_reduce,
    is_freely_reduced, is_simple, is_strongly_reduced, monotone_moves, parse,
    permutation_of, strong_cancel_moves, strong_reduce,
)
from conftest import braid_words, positive_words


def test_parse_alphabetic_and_numeric():
    assert parse("Bacb", 4).letters == (-2, 1, 3, 2)
    assert parse("-2 1 3 2", 4) == parse("Bacb", 4)
    assert parse("-2, 1", 3).letters == (-2, 1)
    assert parse("", 3).letters == ()
    assert parse("ab . AB", 3).letters == (1, 2, -1, -2)


@pytest.mark.parametrize("text,n", [("c", 3), ("a?", 3), ("0", 3), ("-3", 3), ("1 x", 3)])
def test_parse_rejects(text, n):
    with pytest.raises(BraidError):
        parse(text, n)


def test_strands_at_least_two():
    with pytest.raises(BraidError):
        BraidWord(1, ())


def test_format_styles():
    w = parse("Bacb", 4)
    assert format_word(w) == "Bacb"
    assert format_word(w, NUMERIC) == "-2 1 3 2"
    assert str(w) == "Bacb"
    with pytest.raises(BraidError):
        format_word(BraidWord(30, (1,)), ALPHABETIC)


@given(braid_words())
def test_format_round_trip(w):
    assert parse(format_word(w), w.strands) == w
    if w.letters:
        assert parse(format_word(w, NUMERIC), w.strands) == w


@given(braid_words())
def test_inverse_involution(w):
    assert w.inverse().inverse() == w
    assert free_reduce(w + w.inverse()).letters == ()


def test_word_algebra():
    w = parse("aB", 3)
    assert (w * 3).letters == (1, -2) * 3
    assert w[1:] == parse("B", 3)
    assert w[0].index == 1 and w[0].sign == 1
    assert [int(x) for x in w] == [1, -2]
    with pytest.raises(BraidError):
        w + parse("a", 4)


def test_sign_predicates():
    assert parse("abc", 4).is_positive()
    assert parse("ABC", 4).is_negative()
    assert parse("abCA", 4).is_positive_negative()
    assert not parse("abCa", 4).is_positive_negative()
    assert parse("CAab", 4).is_negative_positive()
    assert parse("", 4).is_positive() and parse("", 4).is_negative()


def test_free_reduce_examples():
    assert free_reduce(parse("aAbBc", 4)) == parse("c", 4)
    assert free_reduce(parse("abBA", 3)).letters == ()
    assert free_reduce(parse("aBba", 3)) == parse("aa", 3)


@given(braid_words())
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert is_freely_reduced(r)
    assert exponent_sum(r) == exponent_sum(w)
    assert permutation_of(r) == permutation_of(w)


@given(braid_words())
def test_free_reduce_matches_cancel_to_fixpoint(w):
    # any order of single cancellations ends at the same word
    cur = w
    while True:
        moves = cancel_moves(cur)
        if not moves:
            break
        cur = moves[-1][1]
    assert cur == free_reduce(w)


def test_strong_reduce_examples():
    assert strong_reduce(parse("acA", 4)) == parse("c", 4)
    assert strong_reduce(parse("aCA", 4)) == parse("C", 4)
    assert strong_reduce(parse("abA", 4)) == parse("abA", 4)
    # the collapse exposes a free cancellation
    assert strong_reduce(parse("cacAC", 4)) == parse("c", 4)


@given(braid_words(max_len=14))
def test_strong_reduce_idempotent(w):
    r = strong_reduce(w)
    assert is_strongly_reduced(r)
    assert strong_reduce(r) == r
    assert len(r) <= len(w)
    assert exponent_sum(r) == exponent_sum(w)
    assert permutation_of(r) == permutation_of(w)


def test_strong_cancel_moves():
    (m, v), = strong_cancel_moves(parse("bacA", 4))
    assert m.position == 1 and v == parse("bc", 4)
    assert strong_cancel_moves(parse("abA", 4)) == []


def test_permutation():
    assert permutation_of(parse("aba", 3)).images == (3, 2, 1)
    assert permutation_of(parse("aA", 3)).is_identity()
    assert permutation_of(parse("bab", 3)) == permutation_of(parse("aba", 3))


def _inversions(images):
    return sum(1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j])


def test_is_simple_examples():
    assert is_simple(parse("", 4))
    assert is_simple(parse("abacba", 4))  # half twist on 4 strands
    assert not is_simple(parse("aa", 3))
    assert not is_simple(parse("abab", 3))
    with pytest.raises(BraidError):
        is_simple(parse("aB", 3))


@given(positive_words(max_len=8))
def test_is_simple_matches_inversion_count(u):
    # a positive word is simple iff its length is the inversion number of its permutation
    assert is_simple(u) == (len(u) == _inversions(permutation_of(u).images))


@given(braid_words(max_len=8))
def test_monotone_moves_keep_sign_and_invariants(w):
    for move, v in monotone_moves(w):
        assert move.kind == MONOTONE
        assert len(v) == len(w)
        assert exponent_sum(v) == exponent_sum(w)
        assert permutation_of(v) == permutation_of(w)
        k = move.position
        window = w.letters[k:k + move.window]
        assert all(x > 0 for x in window) or all(x < 0 for x in window)


def test_monotone_moves_listing():
    moves = dict((m, v) for m, v in monotone_moves(parse("abaC", 4)))
    assert moves[Move(MONOTONE, 0, NEAR)] == parse("babC", 4)
    assert Move(MONOTONE, 2, FAR) not in moves  # mixed signs
    assert monotone_moves(parse("abaC", 4), braid_relations=False) == []
    assert moves_to(parse("ac", 4)) == [parse("ca", 4)]


def moves_to(w):
    return [v for _, v in monotone_moves(w)]

