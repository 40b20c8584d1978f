import pytest
from conftest import hopf, square, theta
from hypothesis import given, settings
from hypothesis import strategies as st

import eulerian_alexander.bijection as bijection
from eulerian_alexander.bijection import (
    LEMMAS,
    big_f,
    crowell_weight,
    kauffman_weight,
    lemma_checks,
    phi,
    psi,
    setup,
    verify_weight_relation,
)
from eulerian_alexander.corpus import bipartite_maps, with_each_exterior
from eulerian_alexander.errors import InconsistencyError, InputError
from eulerian_alexander.links import build_link
from eulerian_alexander.trees import arborescences, spanning_trees

MAP_INSTANCES = [h for g in bipartite_maps(5) for h in with_each_exterior(g)]


def _setup(build):
    return setup(build_link(build()))


def _trees(s):
    return spanning_trees(s.link.dual.digraph)


@pytest.mark.parametrize("build, count", [(theta, 3), (hopf, 2), (square, 4)])
def test_phi_gives_distinct_tours_from_f_v(build, count):
    s = _setup(build)
    tours = [phi(s, t) for t in _trees(s)]
    assert len(tours) == len(set(tours)) == count
    n_edges = len(s.crowell.digraph.edges)
    assert all(t[0] == s.f_v and len(t) == n_edges for t in tours)


@pytest.mark.parametrize("build", [theta, hopf, square])
def test_psi_gives_distinct_arborescences(build):
    s = _setup(build)
    arbs = [psi(s, phi(s, t)) for t in _trees(s)]
    assert len(set(arbs)) == len(arbs)
    n = s.crowell.digraph.vertex_count
    assert all(len(a) == n - 1 for a in arbs)
    assert set(arbs) == set(arborescences(s.crowell.digraph, s.v))


def test_psi_validates_its_tour():
    s = _setup(theta)
    tour = phi(s, _trees(s)[0])
    with pytest.raises(InputError):
        psi(s, tour[1:] + tour[:1])
    with pytest.raises(InputError):
        psi(s, tour[:-1])


def test_swapped_pairings_split_the_tour(monkeypatch):
    s = _setup(square)
    monkeypatch.setattr(bijection, "TREE_PAIRS", bijection.NON_TREE_PAIRS)
    monkeypatch.setattr(bijection, "NON_TREE_PAIRS", bijection.TREE_PAIRS)
    with pytest.raises(InconsistencyError):
        phi(s, _trees(s)[0])


@pytest.mark.parametrize(
    "build, degrees_by_k",
    [(theta, {0: 2, 1: 1, 2: 0}), (hopf, {0: 1, 1: 0})],
)
def test_weight_degrees(build, degrees_by_k):
    s = _setup(build)
    for t in _trees(s):
        k, _ = kauffman_weight(s, t)
        assert crowell_weight(s, big_f(s, t)).degree == degrees_by_k[k]


def test_square_degree_multiset_after_shift():
    s = _setup(square)
    rep = verify_weight_relation(s)
    assert rep.m2 == 2
    assert sorted(r.crowell.degree - (rep.m2 - 1) for r in rep.rows) == [0, 0, 1, 1]


@pytest.mark.parametrize("build, rows", [(theta, 3), (hopf, 2), (square, 4)])
def test_weight_relation_and_lemmas(build, rows):
    s = _setup(build)
    rep = verify_weight_relation(s)
    assert len(rep.rows) == rows
    assert rep.ok and rep.injective and rep.surjective
    lem = lemma_checks(s)
    assert lem.ok
    assert set(lem.checked) == set(LEMMAS)


def test_setup_choices():
    s = _setup(theta)
    link = s.link
    assert s.root_face == link.regions[link.exterior].ref
    e0 = link.dual.digraph.edge(s.e0)
    assert e0.fin == s.root_face
    assert s.crowell.digraph.edge(s.f_v).fin == s.v


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(MAP_INSTANCES))
def test_bijection_on_generated_maps(g):
    s = setup(build_link(g))
    rep = verify_weight_relation(s)
    assert rep.ok, rep.violations
    assert rep.m2 == g.colors.count("B")
    lem = lemma_checks(s)
    assert lem.ok, lem.failures
