from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from markov_gfan.errors import ConstraintViolation, NonPositive, NonReduced
from markov_gfan.exchange import (
    ExchangeMatrix,
    SignPattern,
    c_column_signs,
    integer2,
    markov,
    matrix_mutate,
    raw_eval,
    raw_initial,
    raw_step,
    to_modified,
    validate,
)


def test_markov_entries_and_scalars():
    B = markov(1)
    assert [list(r) for r in B.entries] == [[0, -2, 2], [2, 0, -2], [-2, 2, 0]]
    assert B.D == (4, 4, 4)
    assert B.pattern is SignPattern.CYCLIC_A
    assert markov(-1).pattern is SignPattern.CYCLIC_B


def test_integer2_entries_and_scalars():
    B = integer2(1)
    assert [list(r) for r in B.entries] == [[0, -4, 4], [1, 0, -2], [-1, 2, 0]]
    assert B.D == (1, 4, 4)


def test_symmetrizer_makes_db_skew():
    for B in (markov(1), integer2(1), integer2(-1), validate(Fraction(1, 2), 8, 4, 1, 4, 1, 1)):
        b, d = B.entries, B.D
        for i in range(3):
            for j in range(3):
                assert d[i] * b[i][j] == -d[j] * b[j][i]


@pytest.mark.parametrize(
    "params, err",
    [
        ((2, 2, 2, 2, 3, 3), ConstraintViolation),
        ((0, 2, 2, 2, 2, 2), NonPositive),
        ((-2, -2, 2, 2, 2, 2), NonPositive),
        ((1, 4, 1, 4, 1, 4), ConstraintViolation),
    ],
)
def test_validate_rejects(params, err):
    with pytest.raises(err):
        validate(*params)


def test_validate_rejects_floats_and_bad_sign():
    with pytest.raises((TypeError, ValueError)):
        validate(2.0, 2, 2, 2, 2, 2)
    with pytest.raises(ConstraintViolation):
        validate(2, 2, 2, 2, 2, 2, sign=0)


def test_json_round_trip():
    B = validate(Fraction(1, 2), 8, 4, 1, 4, 1, -1)
    assert ExchangeMatrix.from_json(B.to_json()) == B


@pytest.mark.parametrize("B", [markov(1), integer2(1), integer2(-1)])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_mutation_negates_matrix(B, k):
    mutated = matrix_mutate(B.entries, k)
    assert [list(r) for r in mutated] == [[-x for x in r] for r in B.entries]


def test_first_mutation_by_hand():
    # c_3 picks up 2*e_1 because b_13 = 2; g_1 picks up 2*e_3 because b_31 = -2
    st1 = raw_step(raw_initial(markov(1)), 1)
    assert st1.c_column(1) == (-1, 0, 0)
    assert st1.c_column(2) == (0, 1, 0)
    assert st1.c_column(3) == (2, 0, 1)
    assert st1.g_column(1) == (-1, 0, 2)
    assert st1.g_column(2) == (0, 1, 0)
    assert c_column_signs(st1) == (-1, 1, 1)


def test_non_reduced_sequence_rejected():
    with pytest.raises(NonReduced):
        raw_eval(markov(1), (1, 2, 2))


def test_modified_vectors_integral_for_integer2():
    st2 = raw_eval(integer2(1), (1, 2, 3, 1))
    c, g = to_modified(st2)
    assert all(isinstance(x, int) for v in c + g for x in v)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=9))
def test_c_columns_sign_coherent(seq):
    reduced = [seq[0]]
    for k in seq[1:]:
        if k != reduced[-1]:
            reduced.append(k)
    for B in (markov(1), integer2(-1)):
        st_ = raw_eval(B, reduced)
        assert all(s in (1, -1) for s in c_column_signs(st_))
