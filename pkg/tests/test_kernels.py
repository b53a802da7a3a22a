import pytest
from hypothesis import given
from hypothesis import strategies as st

from markov_gfan import kernels

needs_c = pytest.mark.skipif(not kernels.compiled_available(), reason="compiled kernels not built")

coord = st.integers(-40, 40)
triangle = st.tuples(*[coord] * 6)
ray = st.tuples(coord, coord, coord, coord).filter(lambda r: (r[2], r[3]) != (0, 0))

SEED = ((0, 0, -1, 0, 1, 0, 0, 0, 1), (-1, 0, 2, 0, 1, 0, 0, 0, 1), (3, 1, 2), True)


def test_pair_cases():
    unit = (0, 0, 10, 0, 0, 10)
    # shared edge, shared vertex, disjoint, identical: all proper
    assert kernels.triangle_pairs([unit, (10, 0, 0, 10, 10, 10)], "python") == []
    assert kernels.triangle_pairs([unit, (10, 0, 20, 0, 20, 10)], "python") == []
    assert kernels.triangle_pairs([unit, (30, 30, 40, 30, 30, 40)], "python") == []
    assert kernels.triangle_pairs([unit, (0, 10, 10, 0, 0, 0)], "python") == []
    # overlapping interiors and a vertex inside an edge
    assert kernels.triangle_pairs([unit, (1, 1, 20, 1, 1, 20)], "python") == [(0, 1)]
    assert kernels.triangle_pairs([unit, (5, 0, 20, 0, 20, 10)], "python") == [(0, 1)]


def test_ray_cases():
    tri = [(0, 0, 10, 0, 0, 10)]
    assert kernels.rays_vs_triangles([(-5, 5, 1, 0)], tri, "python") == [(0, 0)]
    assert kernels.rays_vs_triangles([(-5, 5, -1, 0)], tri, "python") == []
    # the open ray starting on the boundary and leaving does not count the base point
    assert kernels.rays_vs_triangles([(0, 10, 0, 1)], tri, "python") == []
    assert kernels.rays_vs_triangles([(0, 20, 0, -1)], tri, "python") == [(0, 0)]


def test_expand_tree_shape():
    C, G, K, T = kernels.expand_tree(*SEED, 3, backend="python")
    assert len(C) == len(G) == len(K) == len(T) == 15
    assert T[1] and not T[2]


def test_bad_backend():
    with pytest.raises(ValueError):
        kernels.expand_tree(*SEED, 1, backend="fortran")
    with pytest.raises(ValueError):
        kernels.expand_tree(*SEED, -1)


@needs_c
@pytest.mark.parametrize("depth", [0, 1, 6])
def test_expand_tree_backends_agree(depth):
    assert kernels.expand_tree(*SEED, depth, backend="c") == kernels.expand_tree(*SEED, depth, backend="python")


@needs_c
@given(st.lists(triangle, max_size=8))
def test_triangle_pairs_backends_agree(tris):
    assert sorted(map(tuple, kernels.triangle_pairs(tris, "c"))) == sorted(kernels.triangle_pairs(tris, "python"))


@needs_c
@given(st.lists(ray, max_size=4), st.lists(triangle, max_size=5))
def test_rays_backends_agree(rays, tris):
    got = sorted(map(tuple, kernels.rays_vs_triangles(rays, tris, "c")))
    assert got == sorted(kernels.rays_vs_triangles(rays, tris, "python"))


@needs_c
def test_large_coordinates_fall_back():
    big = kernels.PLANAR_LIMIT * 4
    tris = [(0, 0, big, 0, 0, big), (1, 1, big, 1, 1, big)]
    assert kernels.triangle_pairs(tris, "c") == [(0, 1)]
