import pytest
from hypothesis import given
from hypothesis import strategies as st

from markov_gfan.exchange import SignPattern, integer2, markov, raw_eval, to_modified
from markov_gfan.pattern import (
    eigen_basis,
    eval_walk,
    fixed_g,
    identity_triples,
    iter_states,
    recover,
    seed,
    step,
)
from markov_gfan.vectors import FIXED_C, ModVec, det3, from_columns, unit
from markov_gfan.walk import Walk, initial_kst

PATTERNS = list(SignPattern)
words = st.text("ST", max_size=10)


def test_seed_matches_rule():
    for pattern in PATTERNS:
        for i in (1, 2, 3):
            k, s, t = initial_kst(pattern, i)
            st_ = seed(pattern, i)
            assert st_.c_roles == (-unit(k), unit(s) + unit(k) * 2, unit(t))
            assert st_.g_roles == (unit(s) * 2 - unit(k), unit(s), unit(t))


def test_identity_triples():
    c, g = identity_triples()
    assert c == g == (unit(1), unit(2), unit(3))


def test_fixed_g_markov_subtree_1():
    assert fixed_g(SignPattern.CYCLIC_A, 1) == ModVec(-1, 1, 1)


def test_eval_empty_walk_rejected():
    with pytest.raises(ValueError):
        eval_walk(Walk.empty(SignPattern.CYCLIC_A))


@given(st.sampled_from(PATTERNS), st.integers(1, 3), words)
def test_eigen_basis_recovers_roles(pattern, i, word):
    st_ = eval_walk(Walk.from_word(pattern, i, word))
    assert recover(eigen_basis(st_)) == st_.c_roles + st_.g_roles


@given(st.sampled_from(PATTERNS), st.integers(1, 3), words)
def test_fixed_vectors(pattern, i, word):
    w = Walk.from_word(pattern, i, word)
    eb = eigen_basis(eval_walk(w))
    assert eb.cF == FIXED_C
    if w.is_branch:
        assert eb.gF == fixed_g(pattern, i)


@given(st.sampled_from(PATTERNS), st.integers(1, 3), words)
def test_g_vectors_on_plane_and_unimodular(pattern, i, word):
    st_ = eval_walk(Walk.from_word(pattern, i, word))
    assert all(sum(g) == 1 for g in st_.g_roles)
    assert abs(det3(from_columns(st_.g_roles))) == 1
    assert abs(det3(from_columns(st_.c_roles))) == 1


@given(st.sampled_from([markov(1), markov(-1), integer2(1), integer2(-1)]), st.integers(1, 3), words)
def test_fast_path_equals_raw_recursion(B, i, word):
    w = Walk.from_word(B.pattern, i, word)
    fast = eval_walk(w)
    c, g = to_modified(raw_eval(B, w.seq))
    assert fast.c_triple() == c
    assert fast.g_triple() == g


def test_iter_states_count_and_order():
    states = list(iter_states(SignPattern.CYCLIC_A, 3))
    assert len(states) == 21
    assert str(states[0].walk) == "[1]"


def test_step_matches_eval():
    pattern = SignPattern.CYCLIC_B
    st_ = seed(pattern, 2)
    for letter in "STTS":
        st_ = step(st_, letter)
    assert st_ == eval_walk(Walk.from_word(pattern, 2, "STTS"))
