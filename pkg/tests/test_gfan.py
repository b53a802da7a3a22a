from fractions import Fraction

import pytest

from markov_gfan.errors import NotInHalfSpace
from markov_gfan.exchange import SignPattern
from markov_gfan.fractal import MOD_STD, branch_generator, psi_il
from markov_gfan.gfan import (
    INITIAL_CONE,
    ComplementRay,
    Cone3,
    InCone,
    OnComplementRay,
    UnknownAtDepth,
    UpperBound,
    complements_agree,
    complements_recursive,
    cones_meet_properly,
    disjointness_check,
    enumerate_fan,
    expected_cone_count,
    f_ray,
    fan_property_check,
    fan_snapshot,
    g_uniqueness_check,
    in_region_d,
    locate,
    phi,
    region_d_check,
    rho,
    section,
    section_ray,
    separation_check,
    shared_face,
    upper_bound_check,
)
from markov_gfan.pattern import eval_walk
from markov_gfan.vectors import ModVec, unit
from markov_gfan.walk import Walk, initial_kst

A = SignPattern.CYCLIC_A
PATTERNS = list(SignPattern)


@pytest.mark.parametrize("depth", range(6))
def test_cone_counts(depth):
    for pattern in PATTERNS:
        assert len(enumerate_fan(pattern, depth)) == expected_cone_count(depth)


def test_section_examples():
    assert section(unit(1)).xy == (0, 0)
    assert section(ModVec(-1, 1, 1)).bary == (-1, 1, 1)
    assert section(ModVec(1, 1, 1)).xy == (Fraction(1, 2), Fraction(97, 336))
    assert section(ModVec(2, 0, 0)) == section(unit(1))


def test_section_rejects_lower_half_space():
    for v in [(1, -1, 0), (0, 0, -1)]:
        with pytest.raises(NotInHalfSpace):
            section(v)
    with pytest.raises(ValueError):
        section_ray(unit(1), (1, 0, 0))
    with pytest.raises(ValueError):
        section_ray((1, 1, 0), (1, -1, 0))


def test_initial_cone_shares_edge_with_first_cone():
    first = next(c for c in enumerate_fan(A, 1) if c.walk == "[1]")
    _, s, t = initial_kst(A, 1)
    assert shared_face(INITIAL_CONE, first) == frozenset({unit(s), unit(t)})
    assert cones_meet_properly(INITIAL_CONE, first)


def test_overlapping_cone_detected():
    bogus = Cone3((ModVec(1, 1, -1), ModVec(1, -1, 1), ModVec(-1, 1, 1)), "bogus")
    assert not cones_meet_properly(INITIAL_CONE, bogus)


@pytest.mark.parametrize("pattern", PATTERNS)
def test_fan_checks_shallow(pattern):
    assert fan_property_check(5, pattern).ok
    assert g_uniqueness_check(pattern, 6).ok
    assert region_d_check(pattern, 6).ok


def test_region_d_unit_vectors():
    for i in (1, 2, 3):
        k, s, t = initial_kst(A, i)
        assert in_region_d(A, i, unit(s)) and not in_region_d(A, i, unit(s), interior=True)
        assert not in_region_d(A, i, unit(k))


@pytest.mark.parametrize("word", ["T", "ST", "TST", "SSTS"])
def test_upper_bound_below_walk(word):
    assert upper_bound_check(Walk.from_word(A, 2, word), 4, samples=5).ok


def test_upper_bound_needs_branch():
    with pytest.raises(ValueError):
        upper_bound_check(Walk.from_word(A, 2, "SS"), 2)


def test_upper_bound_contains_own_cone():
    state = eval_walk(Walk.from_word(A, 1, "TS"))
    up = UpperBound.at(state)
    assert up.on_edge(state.gS) and up.on_edge(state.gT)
    assert up.contains_open(state.gK) and not up.on_edge(state.gK)


@pytest.mark.parametrize("pattern", PATTERNS)
def test_separation(pattern):
    assert separation_check(pattern, 3).ok


def test_ray_validation():
    with pytest.raises(ValueError):
        ComplementRay(ModVec(1, 0, 0), ModVec(0, 0, 0), 1)
    with pytest.raises(ValueError):
        ComplementRay(ModVec(1, 1, 0), ModVec(1, -1, 0), 1)
    with pytest.raises(ValueError):
        rho(A, 1, 2, 4)


def test_f_ray_markov():
    ray = f_ray(A, 1)
    assert ray.base == unit(3) and ray.dir == ModVec(1, -1, 0)


@pytest.mark.parametrize("pattern", PATTERNS)
@pytest.mark.parametrize("i", [1, 2, 3])
def test_trunk_shift_powers(pattern, i):
    shift = psi_il(pattern, i, 1).to(MOD_STD)
    ray = f_ray(pattern, i)
    for n in range(1, 7):
        ray = ray.mapped(shift)
        g = eval_walk(Walk.from_word(pattern, i, "S" * (n - 1))).gK
        assert ray.key == phi(pattern, i, g).key


@pytest.mark.parametrize("pattern", PATTERNS)
def test_branch_generator_on_f(pattern):
    for i in (1, 2, 3):
        via_t = f_ray(pattern, i).mapped(branch_generator(pattern, i, 0, "T"))
        assert via_t.key == phi(pattern, i, eval_walk(Walk.from_word(pattern, i, "T")).gK).key


def test_sampled_branch_word():
    gs = branch_generator(A, 3, 0, "S")
    gt = branch_generator(A, 3, 0, "T")
    shift = psi_il(A, 3, 1).to(MOD_STD)
    ray = f_ray(A, 3).mapped(gt).mapped(gt).mapped(gs).mapped(shift).mapped(shift)
    g = eval_walk(Walk.from_word(A, 3, "SSTST")).gK
    assert ray.key == phi(A, 3, g).key


def test_recursive_ray_count():
    for depth in range(1, 7):
        assert len(complements_recursive(A, 1, depth)) == 2**depth


@pytest.mark.parametrize("pattern", PATTERNS)
def test_complements_agree_and_disjoint(pattern):
    for i in (1, 2, 3):
        assert complements_agree(pattern, i, 6, 9).ok
    assert disjointness_check(6, 9, pattern, separation_index=3).ok


def test_locate_cases():
    assert locate(unit(3), 3, 5) == InCone("[]", (3,))
    assert locate((0, 0, 0), 3, 5) == InCone("[]", ())
    assert locate((1, -1, 1), 3, 5) == OnComplementRay(1, 1, 0)
    assert locate((2, 2, -3), 4, 6).walk.startswith("[")
    deep = eval_walk(Walk.from_word(A, 1, "TSTSTS")).gK
    assert locate(deep, 3, 2) == UnknownAtDepth(3, 2)
    assert isinstance(locate(deep, 7, 2), InCone)
    with pytest.raises(NotInHalfSpace):
        locate((0, 0, -1), 3, 5)


def test_snapshot_shape():
    snap = fan_snapshot(A, 2)
    assert len(snap["cones"]) == expected_cone_count(2)
    assert all(set(r) == {"subtree", "a", "b"} for r in snap["complements"])
