import pytest
from hypothesis import given
from hypothesis import strategies as st

from markov_gfan.errors import KIsNotAWordLetter
from markov_gfan.exchange import SignPattern
from markov_gfan.walk import (
    Admissibility,
    Walk,
    admissible,
    initial_kst,
    iter_walks,
    seq_to_word,
    signs_from_scratch,
    word_to_seq,
)

A, B = SignPattern.CYCLIC_A, SignPattern.CYCLIC_B


@pytest.mark.parametrize(
    "pattern, i, kst",
    [
        (A, 1, (1, 3, 2)),
        (A, 2, (2, 1, 3)),
        (A, 3, (3, 2, 1)),
        (B, 1, (1, 2, 3)),
        (B, 2, (2, 3, 1)),
        (B, 3, (3, 1, 2)),
    ],
)
def test_initial_roles(pattern, i, kst):
    assert initial_kst(pattern, i) == kst


def test_parse_forms_agree():
    w = Walk.parse(A, "[1]ST")
    assert w == Walk.parse(A, ",".join(map(str, w.seq)))
    assert w.notation == "[1]ST"
    assert Walk.parse(A, "[]") == Walk.empty(A)
    with pytest.raises(ValueError):
        Walk.parse(A, "[4]S")


def test_letter_for_rejects_k():
    w = Walk.parse(A, "[2]T")
    with pytest.raises(KIsNotAWordLetter):
        w.letter_for(w.kst[0])


def test_trunk_and_branch():
    assert Walk.parse(A, "[1]SSS").is_trunk
    assert Walk.parse(A, "[1]SST").is_branch
    assert admissible(Walk.parse(A, "[1]S"), Walk.parse(A, "[2]SS")) is Admissibility.TRUNK_PAIR
    assert admissible(Walk.parse(A, "[1]T"), Walk.parse(A, "[3]STS")) is Admissibility.BRANCH_PAIR
    assert admissible(Walk.parse(A, "[1]T"), Walk.parse(A, "[3]S")) is Admissibility.NO


def test_prefix_order():
    assert Walk.parse(A, "[1]S") <= Walk.parse(A, "[1]ST")
    assert not Walk.parse(A, "[1]T") <= Walk.parse(A, "[1]ST")


@pytest.mark.parametrize("pattern", list(SignPattern))
def test_walk_counts(pattern):
    for d in range(6):
        assert sum(1 for _ in iter_walks(pattern, d)) == 3 * (2**d - 1)


@given(st.sampled_from(list(SignPattern)), st.integers(1, 3), st.text("ST", max_size=12))
def test_word_seq_round_trip(pattern, i, word):
    seq = word_to_seq(pattern, i, word)
    assert seq_to_word(pattern, seq) == (i, word)
    w = Walk.from_seq(pattern, seq)
    assert w.word == word and len(w) == len(word) + 1


@given(st.sampled_from(list(SignPattern)), st.integers(1, 3), st.text("ST", max_size=12))
def test_signs_from_scratch_matches_replay(pattern, i, word):
    w = Walk.from_word(pattern, i, word)
    eps, s_index = signs_from_scratch(pattern, w.seq)
    assert eps == w.eps
    assert s_index == w.kst[1]
    assert w.kst[0] != s_index
