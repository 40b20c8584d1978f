from itertools import combinations, permutations
from math import factorial

import pytest
from conftest import bidirected_triangle, eulerian, square_dual, three_cycle, two_cycle
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerian_alexander.corpus import eulerian_corpus
from eulerian_alexander.errors import InputError
from eulerian_alexander.graphs import transpose
from eulerian_alexander.trees import (
    arborescences,
    best_count,
    c0_matrix_tree,
    ck_inclusion_exclusion,
    ck_inclusion_exclusion_vector,
    ck_vector,
    classify,
    count_eulerian_tours,
    eulerian_tours,
    forests,
    oriented_spanning_trees,
    spanning_trees,
)

SMALL = eulerian_corpus(4, 7)


def _is_spanning_tree(d, edges):
    parent = list(range(d.vertex_count))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for eid in edges:
        e = d.edge(eid)
        a, b = find(e.init), find(e.fin)
        if a == b:
            return False
        parent[a] = b
    return len(edges) == d.vertex_count - 1


def brute_trees(d):
    ids = [e.id for e in d.edges]
    return sorted(c for c in combinations(ids, d.vertex_count - 1) if _is_spanning_tree(d, c))


def brute_arborescences(d, r):
    """Trees in which every vertex other than ``r`` has exactly one incoming edge."""
    out = []
    for tree in brute_trees(d):
        heads = sorted(d.edge(e).fin for e in tree)
        if heads == sorted(v for v in range(d.vertex_count) if v != r):
            out.append(tree)
    return out


def brute_tours(d, first):
    """Edge orderings starting at ``first`` that chain head to tail."""
    rest = [e.id for e in d.edges if e.id != first]
    count = 0
    for perm in permutations(rest):
        seq = (first, *perm)
        if all(d.edge(seq[i]).fin == d.edge(seq[i + 1]).init for i in range(len(seq) - 1)):
            count += 1
    return count


def test_spanning_tree_examples():
    assert spanning_trees(three_cycle()) == [(0, 1), (0, 2), (1, 2)]
    assert len(spanning_trees(two_cycle())) == 2
    assert len(spanning_trees(bidirected_triangle())) == 12


def test_classify_examples():
    d = three_cycle()
    assert classify(d, [0, 1], 2).k == 0
    assert classify(d, [0, 1], 0).k == 2
    b = bidirected_triangle()
    assert classify(b, [0, 4], 0).k == 2


def test_classify_rejects_non_trees():
    with pytest.raises(InputError):
        classify(three_cycle(), [0], 0)


def test_ck_vector_examples():
    for r in range(3):
        assert ck_vector(three_cycle(), r) == [1, 1, 1]
        assert ck_vector(bidirected_triangle(), r) == [3, 6, 3]
    assert ck_vector(square_dual(), 0) == ck_vector(square_dual(), 1) == [2, 2]


def test_arborescence_examples():
    for r in range(3):
        assert len(arborescences(three_cycle(), r)) == 1
    assert len(arborescences(bidirected_triangle(), 0)) == 3
    assert len(arborescences(two_cycle(), 0)) == 1


def test_tour_count_examples():
    assert all(count_eulerian_tours(three_cycle(), e) == 1 for e in range(3))
    assert count_eulerian_tours(bidirected_triangle(), 0) == 3
    assert all(count_eulerian_tours(square_dual(), e) == 2 for e in range(4))


def test_inclusion_exclusion_examples():
    assert ck_inclusion_exclusion(three_cycle(), 0, 0) == 1
    assert ck_inclusion_exclusion(three_cycle(), 0, 1) == 1
    assert ck_inclusion_exclusion(bidirected_triangle(), 0, 1) == 6


def test_loops_never_enter_trees():
    d = eulerian(2, [(0, 0), (0, 1), (1, 0), (1, 1)])
    assert all(0 not in t and 3 not in t for t in spanning_trees(d))
    assert ck_vector(d, 0) == [1, 1]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL))
def test_tree_enumeration_matches_brute_force(d):
    assert sorted(spanning_trees(d)) == brute_trees(d)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_arborescences_match_brute_force_and_matrix_tree(d, data):
    r = data.draw(st.integers(0, d.vertex_count - 1))
    arbs = sorted(arborescences(d, r))
    assert arbs == brute_arborescences(d, r)
    assert len(oriented_spanning_trees(d, r)) == len(arbs) == c0_matrix_tree(d, r)
    assert sorted(oriented_spanning_trees(d, r)) == sorted(arborescences(transpose(d), r))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_k_counts_partition_trees(d, data):
    r = data.draw(st.integers(0, d.vertex_count - 1))
    vec = ck_vector(d, r)
    assert sum(vec) == len(spanning_trees(d))
    assert len(vec) == d.vertex_count
    assert vec[0] == len(oriented_spanning_trees(d, r))
    assert vec[-1] == len(arborescences(d, r))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([d for d in SMALL if len(d.edges) <= 7]))
def test_tours_match_brute_force_and_best(d):
    for e in d.edges:
        n = count_eulerian_tours(d, e.id)
        assert n == brute_tours(d, e.id)
        assert n == best_count(d, e.init)


def test_best_formula_by_hand():
    d = bidirected_triangle()
    assert best_count(d, 0) == c0_matrix_tree(d, 0) * factorial(1) ** 3


def test_tours_are_closed_walks():
    d = bidirected_triangle()
    tours = list(eulerian_tours(d, 0))
    assert len(tours) == 3 and len(set(tours)) == 3
    for tour in tours:
        assert sorted(tour) == [e.id for e in d.edges]
        for a, b in zip(tour, tour[1:] + tour[:1]):
            assert d.edge(a).fin == d.edge(b).init


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL))
def test_forests_are_acyclic_and_complete(d):
    found = {tuple(sorted(f)) for f in forests(d)}
    ids = [e.id for e in d.edges if not e.is_loop]
    expected = {c for size in range(d.vertex_count) for c in combinations(ids, size) if _acyclic(d, c)}
    assert found == expected


def _acyclic(d, edges):
    parent = list(range(d.vertex_count))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for eid in edges:
        e = d.edge(eid)
        a, b = find(e.init), find(e.fin)
        if a == b:
            return False
        parent[a] = b
    return True


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_inclusion_exclusion_matches_enumeration(d, data):
    r = data.draw(st.integers(0, d.vertex_count - 1))
    assert ck_inclusion_exclusion_vector(d, r) == ck_vector(d, r)
