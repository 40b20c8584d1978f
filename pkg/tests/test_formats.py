import pytest
from conftest import DATA, PLANE_FIXTURES
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerian_alexander.corpus import bipartite_maps, eulerian_corpus, with_each_exterior
from eulerian_alexander.errors import InputError
from eulerian_alexander.formats import (
    load_bipartite,
    load_digraph,
    parse,
    parse_bipartite,
    parse_digraph,
    serialize_bipartite,
    serialize_digraph,
)
from eulerian_alexander.graphs import HalfEdge

CANONICAL = "v 3\ne 0 1\ne 1 2\ne 2 0\n"


def test_canonical_digraph_round_trip():
    d, rot = parse_digraph(CANONICAL)
    assert rot is None
    assert serialize_digraph(d) == CANONICAL


def test_comments_and_blank_lines_are_canonicalised():
    messy = "# a comment\n\nv   3\ne 0 1   # first\ne 1 2\n\ne 2 0\n"
    d, _ = parse_digraph(messy)
    assert serialize_digraph(d) == CANONICAL


@pytest.mark.parametrize("name", ["theta", "hopf", "square"])
def test_bipartite_data_files_are_canonical_after_comments(name):
    text = (DATA / f"{name}.txt").read_text()
    body = "".join(line + "\n" for line in text.splitlines() if not line.startswith("#"))
    assert serialize_bipartite(parse_bipartite(text)) == body


@pytest.mark.parametrize("name", sorted(PLANE_FIXTURES))
def test_bipartite_round_trip(name):
    g = PLANE_FIXTURES[name]()
    text = serialize_bipartite(g)
    again = parse_bipartite(text)
    assert serialize_bipartite(again) == text
    assert again.colors == g.colors and again.rotation == g.rotation


def test_outer_line_round_trips():
    g = with_each_exterior(PLANE_FIXTURES["theta"]())[1]
    text = serialize_bipartite(g)
    assert "outer " in text
    assert parse_bipartite(text).outer_face == g.outer_face


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(eulerian_corpus(4, 7)))
def test_corpus_round_trip(d):
    text = serialize_digraph(d)
    d2, _ = parse_digraph(text)
    assert d2 == d and serialize_digraph(d2) == text


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(bipartite_maps(5)))
def test_map_round_trip(g):
    text = serialize_bipartite(g)
    assert serialize_bipartite(parse_bipartite(text)) == text


def test_rotation_tokens():
    p = parse("v 2\ne 0 1\ne 1 0\nrot 0: 0+ 1-\nrot 1: 0- 1+\n")
    assert p.rotation.rotations[0] == (HalfEdge(0, "+"), HalfEdge(1, "-"))


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("e 0 1\n", "missing 'v"),
        ("v 2\nv 2\n", "line 2"),
        ("v two\n", "line 1"),
        ("v 2\ne 0\n", "two endpoints"),
        ("v 2\ne 0 5\n", "outside"),
        ("v 2\nx 1\n", "unknown directive"),
        ("v 2\ne 0 1\nrot 0 0+\n", "colon"),
        ("v 2\ne 0 1\nrot 0: 0+\n", "every vertex"),
        ("v 2\ne 0 1\nrot 0: 0+\nrot 1: 0+\n", "listed twice"),
        ("v 2\ne 0 1\ncolor 0 C\n", "A|B"),
    ],
)
def test_malformed_files(text, fragment):
    with pytest.raises(InputError, match=fragment):
        parse(text)


def test_bipartite_needs_colours_and_rotations():
    with pytest.raises(InputError, match="color"):
        parse_bipartite("v 2\ne 0 1\nrot 0: 0+\nrot 1: 0-\n")
    with pytest.raises(InputError, match="rotation"):
        parse_bipartite("v 2\ne 0 1\ncolor 0 A\ncolor 1 B\n")


def test_improper_colouring_is_rejected():
    with pytest.raises(InputError, match="colour"):
        parse_bipartite("v 2\ne 0 1\ncolor 0 A\ncolor 1 A\nrot 0: 0+\nrot 1: 0-\n")


def test_digraph_files_refuse_colours():
    with pytest.raises(InputError):
        parse_digraph("v 2\ne 0 1\ne 1 0\ncolor 0 A\ncolor 1 B\n")


def test_loaders(tmp_path):
    d, _ = load_digraph(DATA / "three_cycle.txt")
    assert d.vertex_count == 3
    assert load_bipartite(DATA / "theta.txt").graph.vertex_count == 2
    with pytest.raises(InputError, match="cannot read"):
        load_digraph(tmp_path / "missing.txt")
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"\xff\xfe")
    with pytest.raises(InputError, match="UTF-8"):
        load_digraph(bad)
