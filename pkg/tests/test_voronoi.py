import random

import pytest

from sphere import formulas
from sphere.circles import enumerate_separable
from sphere.errors import IndexOutOfRange, SizeMismatch, WrongOrder
from sphere.geom_core import mask_of
from sphere.voronoi import (Color, EdgeKey, StratumKind, VertexKey, antipodal_check, build_graph,
                            euler_characteristic, format_edge_key, format_vertex_key, gluing_count_check,
                            is_connected, is_three_regular, near_far_split, region_sampling_check, strata_counts,
                            stratum_of, to_networkx)


@pytest.mark.parametrize("n, k, expected", [
    (6, 2, (8, 12, 30, 12)),
    (4, 1, (0, 4, 6, 4)),
    (4, 2, (4, 4, 12, 6)),
    (6, 3, (12, 12, 36, 14)),
])
def test_strata_counts(seeded_config, n, k, expected):
    graph = build_graph(seeded_config(n), k)
    assert strata_counts(graph) == expected


@pytest.mark.parametrize("n", [5, 7])
@pytest.mark.parametrize("seed", range(2))
def test_every_order_is_a_sphere_graph(seeded_config, n, seed):
    config = seeded_config(n, seed)
    for k in range(1, n):
        graph = build_graph(config, k)
        assert strata_counts(graph) == formulas.strata(k, n)
        assert euler_characteristic(graph) == 2
        assert is_connected(graph)
        assert is_three_regular(graph)


def test_regions_are_the_separable_sets(seeded_config):
    config = seeded_config(6)
    graph = build_graph(config, 3)
    assert set(graph.regions) == set(enumerate_separable(config, 3))
    bordered = {region for edge in graph.edges for region in edge.regions}
    assert bordered == set(graph.regions)


def test_vertex_colors(seeded_config):
    graph = build_graph(seeded_config(6), 3)
    for vertex in graph.vertices:
        assert graph.color_of(vertex.key) is vertex.color
        expected = 1 if vertex.color is Color.WHITE else 2
        assert vertex.key.near.bit_count() == expected
        assert len(graph.vertex_edges[vertex.key]) == 3


def test_first_order_has_no_white_vertices(seeded_config):
    graph = build_graph(seeded_config(5), 1)
    assert all(v.color is Color.BLACK for v in graph.vertices)
    last = build_graph(seeded_config(5), 4)
    assert all(v.color is Color.WHITE for v in last.vertices)


def test_networkx_view(seeded_config):
    graph = build_graph(seeded_config(5), 2)
    g = to_networkx(graph)
    assert g.number_of_nodes() == len(graph.vertices)
    assert g.number_of_edges() == len(graph.edges)


def test_build_graph_rejects_bad_orders(seeded_config, planar):
    with pytest.raises(IndexOutOfRange):
        build_graph(seeded_config(5), 0)
    with pytest.raises(IndexOutOfRange):
        build_graph(seeded_config(5), 5)
    with pytest.raises(SizeMismatch):
        build_graph(planar((0, 0), (1, 0), (0, 1)), 1)


# --- Points of the sphere ---

def test_near_far_split_at_a_dot(named):
    config = named("five-dots")
    p = config.dots[0].as_tuple()
    minus, plus = near_far_split(config, 2, p)
    assert minus == mask_of([0, 2])
    assert plus == mask_of([1, 3, 4])
    assert stratum_of(config, 2, p).kind is StratumKind.REGION


def test_near_far_split_on_a_bisector(planar):
    config = planar((0, 0), ("1/10", 0), (5, 5), (-5, 5), (0, -5))
    d1, d2 = config.dots[0], config.dots[1]
    p = tuple(a + b for a, b in zip(d1.as_tuple(), d2.as_tuple()))
    minus, plus = near_far_split(config, 1, p)
    assert minus & plus == mask_of([0, 1])
    stratum = stratum_of(config, 1, p)
    assert stratum.kind is StratumKind.EDGE
    assert stratum.key == EdgeKey((0, 1), 0)


def test_vertex_stratum(seeded_config):
    config = seeded_config(5)
    graph = build_graph(config, 2)
    key = graph.vertices[0].key
    a, b, c = (config.dots[i] for i in (reversed(key.triple) if key.reversed else key.triple))
    ab = [y - x for x, y in zip(a.as_tuple(), b.as_tuple())]
    ac = [y - x for x, y in zip(a.as_tuple(), c.as_tuple())]
    normal = (ab[1] * ac[2] - ab[2] * ac[1], ab[2] * ac[0] - ab[0] * ac[2], ab[0] * ac[1] - ab[1] * ac[0])
    stratum = stratum_of(config, 2, normal)
    assert stratum.kind is StratumKind.VERTEX
    assert stratum.key == key


def test_sampled_directions_land_in_regions(seeded_config):
    graph = build_graph(seeded_config(6), 3)
    assert region_sampling_check(graph, random.Random(5), samples=30)


# --- Symmetry and gluing ---

@pytest.mark.parametrize("n", [4, 6, 8])
def test_antipodal_symmetry(seeded_config, n):
    graph = build_graph(seeded_config(n), n // 2)
    assert antipodal_check(graph)
    whites, blacks, _, _ = strata_counts(graph)
    assert whites == blacks


def test_antipodal_needs_half_order(seeded_config):
    graph = build_graph(seeded_config(6), 2)
    with pytest.raises(WrongOrder):
        antipodal_check(graph)
    whites, blacks, _, _ = strata_counts(graph)
    assert whites != blacks


@pytest.mark.parametrize("name", ["center-and-triangle", "two-pairs", "five-dots", "six-dots"])
def test_gluing_counts(named, name):
    config = named(name)
    for k in range(2, config.n):
        assert gluing_count_check(config, k)


def test_center_and_triangle_white_vertices(named):
    config = named("center-and-triangle")
    assert strata_counts(build_graph(config, 2))[0] == 4


# --- Labels ---

def test_labels():
    assert format_edge_key(EdgeKey((0, 1), 0b100)) == "{1,2}|{3}"
    assert format_vertex_key(VertexKey((0, 2, 3), False, 0)) == "(1,3,4)|{}"
    assert format_vertex_key(VertexKey((0, 2, 3), True, 0b10), Color.BLACK) == "black:(4,3,1)|{2}"


def test_graph_is_deterministic(seeded_config):
    assert build_graph(seeded_config(6), 2).vertex_keys == build_graph(seeded_config(6), 2).vertex_keys
