"""Cross-module invariants over randomly drawn walks and parameters."""

from math import gcd

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from markov_gfan.cw import c_params, g_from_coprime, is_g_vector
from markov_gfan.exchange import SignPattern, markov, integer2, matrix_mutate
from markov_gfan.gfan import InCone, OnComplementRay, locate, rho
from markov_gfan.pattern import eval_walk
from markov_gfan.vectors import dot
from markov_gfan.walk import Walk

patterns = st.sampled_from(list(SignPattern))
subtrees = st.integers(1, 3)
words = st.text("ST", max_size=7)


@given(patterns, subtrees, words)
def test_c_and_g_roles_are_dual(pattern, i, word):
    state = eval_walk(Walk.from_word(pattern, i, word))
    pairing = [[dot(c, g) for g in state.g_roles] for c in state.c_roles]
    assert pairing == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


@given(st.sampled_from([markov(1), markov(-1), integer2(1), integer2(-1)]), st.integers(1, 3))
def test_matrix_mutation_is_involutive(B, k):
    once = matrix_mutate(B.entries, k)
    assert [list(r) for r in matrix_mutate(once, k)] == [list(r) for r in B.entries]


@settings(max_examples=30)
@given(patterns, subtrees, st.text("ST", max_size=5))
def test_new_g_vector_is_located_at_its_walk(pattern, i, word):
    w = Walk.from_word(pattern, i, word)
    state = eval_walk(w)
    found = locate(state.gK, len(w), 2, pattern)
    assert isinstance(found, InCone) and found.walk == str(w)
    assert len(found.face) == 1


@given(patterns, subtrees, words)
def test_g_vectors_classified_to_own_subtree(pattern, i, word):
    state = eval_walk(Walk.from_word(pattern, i, word))
    hit = is_g_vector(state.gK, pattern)
    assert hit.subtree == i
    assert g_from_coprime(pattern, i, hit.a, hit.b) == state.gK


@given(patterns, subtrees, words)
def test_c_vectors_have_parameters(pattern, i, word):
    state = eval_walk(Walk.from_word(pattern, i, "T" + word))
    for c in state.c_roles:
        assert c_params(pattern, i, c) is not None


@settings(max_examples=30)
@given(patterns, subtrees, st.integers(1, 7), st.integers(0, 7))
def test_points_on_complement_rays_avoid_cones(pattern, i, a, b):
    assume(gcd(a, b) == 1)
    ray = rho(pattern, i, a, b)
    point = ray.base + ray.dir
    assert locate(point, 4, a + b, pattern) == OnComplementRay(i, a, b)
