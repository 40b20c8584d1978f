from collections import Counter

import pytest
from conftest import bidirected_triangle, eulerian, single_edge, square, theta, three_cycle
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerian_alexander.corpus import eulerian_corpus
from eulerian_alexander.errors import EmbeddingError, InputError
from eulerian_alexander.graphs import (
    Digraph,
    EulerianDigraph,
    HalfEdge,
    PlanarBipartiteGraph,
    RotationSystem,
    as_eulerian,
    contract,
    faces,
    is_alternating,
    is_eulerian,
    medial_graph,
    planar_dual,
    transpose,
)


def _multiset(d):
    return Counter((e.init, e.fin) for e in d.edges)


def test_is_eulerian_examples():
    assert is_eulerian(three_cycle())
    assert not is_eulerian(Digraph.from_pairs(2, [(0, 1)]))
    assert is_eulerian(bidirected_triangle())


def test_disconnected_balanced_digraph_is_not_eulerian():
    d = Digraph.from_pairs(4, [(0, 1), (1, 0), (2, 3), (3, 2)])
    assert not is_eulerian(d)
    with pytest.raises(InputError):
        as_eulerian(d)


def test_isolated_vertex_breaks_connectivity():
    assert not is_eulerian(Digraph.from_pairs(2, [(0, 0)]))


def test_eulerian_constructor_validates():
    with pytest.raises(InputError):
        EulerianDigraph(2, ((0, 0, 1),))


def test_transpose_examples():
    assert _multiset(transpose(three_cycle())) == Counter([(1, 0), (2, 1), (0, 2)])
    single = eulerian(1, [])
    assert transpose(single).edges == single.edges
    k2 = eulerian(2, [(0, 1), (1, 0)])
    assert _multiset(transpose(k2)) == _multiset(k2)


def test_transpose_keeps_edge_ids():
    d = bidirected_triangle()
    assert [e.id for e in transpose(d).edges] == [e.id for e in d.edges]


def test_contract_examples():
    d = three_cycle()
    one = contract(d, [0])
    assert one.vertex_count == 2 and _multiset(one) == Counter([(0, 1), (1, 0)])
    two = contract(d, [0, 1])
    assert two.vertex_count == 1 and [(e.init, e.fin) for e in two.edges] == [(0, 0)]
    assert contract(d, []) == d


def test_contract_keeps_surviving_ids():
    assert [e.id for e in contract(three_cycle(), [1]).edges] == [0, 2]


def test_contract_is_total_on_cycles():
    d = contract(three_cycle(), [0, 1, 2])
    assert d.vertex_count == 1 and d.edges == ()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(eulerian_corpus(4, 6)), st.data())
def test_contract_vertex_count(d, data):
    from eulerian_alexander.trees import forests

    f = data.draw(st.sampled_from(list(forests(d))))
    c = contract(d, f)
    assert c.vertex_count == d.vertex_count - len(f)
    assert is_eulerian(c)


def test_faces_of_square_and_theta():
    assert len(faces(square().rotation, square().graph)) == 2
    assert len(faces(theta().rotation, theta().graph)) == 3


def test_faces_of_single_loop():
    d = Digraph.from_pairs(1, [(0, 0)])
    rs = RotationSystem(((HalfEdge(0, "+"), HalfEdge(0, "-")),))
    assert len(faces(rs, d)) == 2


def test_every_dart_lies_in_one_face():
    g = theta()
    darts = [h for cyc in g.face_cycles for h in cyc]
    assert len(darts) == len(set(darts)) == 2 * len(g.graph.edges)


def test_nonplanar_rotation_is_rejected():
    d = Digraph.from_pairs(2, [(0, 1)] * 3)
    rs = RotationSystem(tuple(tuple(HalfEdge(i, end) for i in range(3)) for end in "+-"))
    with pytest.raises(EmbeddingError):
        faces(rs, d)


def test_bipartite_graph_checks_colouring():
    d = Digraph.from_pairs(2, [(0, 1)])
    rs = RotationSystem(((HalfEdge(0, "+"),), (HalfEdge(0, "-"),)))
    with pytest.raises(InputError):
        PlanarBipartiteGraph(d, ("A", "A"), rs)


def test_dual_of_theta_is_three_cycle():
    dual = planar_dual(theta()).digraph
    assert dual.vertex_count == 3
    assert all(dual.odeg(v) == dual.indeg(v) == 1 for v in range(3))
    assert dual.is_connected()


def test_dual_of_square():
    dual = planar_dual(square())
    d = dual.digraph
    assert d.vertex_count == 2 and len(d.edges) == 4
    assert _multiset(d) == Counter({(0, 1): 2, (1, 0): 2})
    assert is_alternating(d, dual.rotation)


def test_dual_of_single_edge():
    d = planar_dual(single_edge()).digraph
    assert d.vertex_count == 1 and [(e.init, e.fin) for e in d.edges] == [(0, 0)]


def test_dual_edge_has_a_vertex_on_its_left(plane_fixture):
    _, g = plane_fixture
    dual = planar_dual(g)
    face_of = g.face_of()
    for e in dual.digraph.edges:
        x = g.a_dart(e.id)
        # the A dart leaves the A end with the dual fin on its left
        assert face_of[x] == e.fin
        assert g.colors[g.graph.endpoint(x)] == "A"


def test_medial_graph_shapes():
    m = medial_graph(theta())
    assert m.digraph.vertex_count == 3 and len(m.digraph.edges) == 6
    m = medial_graph(square())
    assert m.digraph.vertex_count == 4 and len(m.digraph.edges) == 8
    m = medial_graph(single_edge())
    assert m.digraph.vertex_count == 1 and all(e.is_loop for e in m.digraph.edges) and len(m.digraph.edges) == 2


def test_medial_graph_is_four_regular(plane_fixture):
    _, g = plane_fixture
    m = medial_graph(g).digraph
    for v in range(m.vertex_count):
        assert m.odeg(v) + m.indeg(v) == 4


def test_halfedge_tokens():
    assert HalfEdge.parse("12+") == HalfEdge(12, "+")
    assert HalfEdge(3, "-").twin == HalfEdge(3, "+")
    with pytest.raises(InputError):
        HalfEdge.parse("x+")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(eulerian_corpus(4, 6)))
def test_transpose_is_an_involution(d):
    assert transpose(transpose(d)) == d
    assert is_eulerian(transpose(d))
