import pytest
from conftest import bidirected_triangle, eulerian, three_cycle, two_cycle
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerian_alexander.alexander import pd
from eulerian_alexander.corpus import eulerian_corpus
from eulerian_alexander.errors import InputError
from eulerian_alexander.polynomials import IntPoly
from eulerian_alexander.rootpolytope import (
    TUMatrix,
    arborescence_simplices_unimodular,
    dual_tu_matrix,
    is_co_eulerian,
    normalized_volume,
    polytope_expansion,
    polytope_expansion_from_matrix,
    root_polytope_volume,
    signed_circuits,
    verify_totally_unimodular,
)
from eulerian_alexander.trees import c0_matrix_tree, spanning_trees

CORPUS = [d for d in eulerian_corpus(4, 7) if len(d.edges) >= d.vertex_count]


def test_three_cycle_matrix():
    m = dual_tu_matrix(three_cycle(), [0, 1])
    assert m.rows == ((1, 1, 1),)
    assert verify_totally_unimodular(m, 1)


def test_two_cycle_matrix():
    assert dual_tu_matrix(two_cycle(), [0]).rows == ((1, 1),)


def test_two_cycle_signed_circuit_is_balanced():
    m = dual_tu_matrix(two_cycle(), [0])
    circuits = signed_circuits(m)
    assert circuits == [(frozenset({0}), frozenset({1}))]
    assert is_co_eulerian(m)


def test_non_tree_is_rejected():
    with pytest.raises(InputError):
        dual_tu_matrix(three_cycle(), [0])


def test_non_unimodular_matrix():
    m = TUMatrix(((1, 1), (1, -1)), (0, 1))
    assert not verify_totally_unimodular(m, 2)
    assert verify_totally_unimodular(m, 1)


def test_bad_entries():
    with pytest.raises(InputError):
        TUMatrix(((2, 0),), (0, 1))


@pytest.mark.parametrize("build, volume", [(three_cycle, 1), (bidirected_triangle, 3), (two_cycle, 1)])
def test_normalized_volume(build, volume):
    d = build()
    assert normalized_volume(d, 0) == volume
    m = dual_tu_matrix(d, spanning_trees(d)[0])
    assert root_polytope_volume(m) == volume


def test_three_cycle_expansion_census():
    s = IntPoly([-1, 1])
    assert polytope_expansion(three_cycle(), 0) == IntPoly([3]) + s.scale(3) + s**2 == IntPoly([1, 1, 1])


def test_two_cycle_and_loop_expansions():
    assert polytope_expansion(two_cycle(), 0) == IntPoly([1, 1])
    assert polytope_expansion(eulerian(1, [(0, 0), (0, 0)]), 0) == IntPoly([1])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CORPUS), st.data())
def test_dual_matrix_properties(d, data):
    tree = data.draw(st.sampled_from(spanning_trees(d)))
    m = dual_tu_matrix(d, tree)
    assert m.shape == (len(d.edges) - d.vertex_count + 1, len(d.edges))
    assert verify_totally_unimodular(m, min(4, *m.shape))
    assert is_co_eulerian(m)
    assert all(sum(col) == 1 for col in zip(*m.rows))
    assert arborescence_simplices_unimodular(d, 0, m)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CORPUS), st.data())
def test_geometric_volume_equals_c0(d, data):
    tree = data.draw(st.sampled_from(spanning_trees(d)))
    r = data.draw(st.integers(0, d.vertex_count - 1))
    assert root_polytope_volume(dual_tu_matrix(d, tree)) == normalized_volume(d, r) == c0_matrix_tree(d, r)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(CORPUS))
def test_expansion_equals_pd(d):
    assert polytope_expansion(d, 0) == pd(d)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([d for d in CORPUS if len(d.edges) <= 6]))
def test_matrix_only_expansion_equals_pd(d):
    m = dual_tu_matrix(d, spanning_trees(d)[0])
    assert polytope_expansion_from_matrix(m) == pd(d)
