import sys
from pathlib import Path

import pytest

from eulerian_alexander.graphs import Digraph, EulerianDigraph, HalfEdge, PlanarBipartiteGraph, RotationSystem

DATA = Path(__file__).resolve().parent.parent / "data"


def plane(n, pairs, colors, rotations, outer=None):
    d = Digraph.from_pairs(n, pairs)
    rs = RotationSystem(tuple(tuple(HalfEdge.parse(t) for t in r.split()) for r in rotations))
    return PlanarBipartiteGraph(d, tuple(colors), rs, HalfEdge.parse(outer) if outer else None)


def eulerian(n, pairs):
    return EulerianDigraph(n, tuple((i, u, v) for i, (u, v) in enumerate(pairs)))


def theta():
    return plane(2, [(0, 1)] * 3, "AB", ["0+ 2+ 1+", "0- 1- 2-"])


def hopf():
    return plane(2, [(0, 1)] * 2, "AB", ["0+ 1+", "0- 1-"])


def square():
    return plane(4, [(0, 1), (1, 2), (2, 3), (3, 0)], "ABAB", ["0+ 3-", "1+ 0-", "2+ 1-", "3+ 2-"])


def single_edge():
    return plane(2, [(0, 1)], "AB", ["0+", "0-"])


def square_with_pendant():
    return plane(
        5,
        [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)],
        "ABABB",
        ["0+ 4+ 3-", "1+ 0-", "2+ 1-", "3+ 2-", "4-"],
    )


def theta_with_pendant():
    return plane(3, [(0, 1), (0, 1), (0, 1), (2, 1)], "ABA", ["0+ 2+ 1+", "0- 3- 1- 2-", "3+"])


PLANE_FIXTURES = {
    "theta": theta,
    "hopf": hopf,
    "square": square,
    "single_edge": single_edge,
    "square_with_pendant": square_with_pendant,
    "theta_with_pendant": theta_with_pendant,
}


def three_cycle():
    return eulerian(3, [(0, 1), (1, 2), (2, 0)])


def two_cycle():
    return eulerian(2, [(0, 1), (1, 0)])


def bidirected_triangle():
    return eulerian(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)])


def square_dual():
    return eulerian(2, [(0, 1), (1, 0), (0, 1), (1, 0)])


def single_vertex():
    return eulerian(1, [])


@pytest.fixture(params=sorted(PLANE_FIXTURES))
def plane_fixture(request):
    return request.param, PLANE_FIXTURES[request.param]()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
