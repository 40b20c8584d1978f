"""Line-oriented text formats for digraphs and plane bipartite graphs.

Digraph file::

    # directed 3-cycle
    v 3
    e 0 1
    e 1 2
    e 2 0
    rot 0: 0+ 2-          (optional, one line per vertex)

Edges get ids ``0, 1, ...`` in file order.  A half-edge token is
``<edge id>+`` for the initial end or ``<edge id>-`` for the final end.

Bipartite file: the same, plus one ``color <vertex> A|B`` line per vertex.
Edge direction only fixes which end is ``+``.  Rotation lines are required
and list half-edges counterclockwise.  An optional ``outer <half-edge>``
line names a dart whose left face is the exterior.

Serialisation writes ``v``, ``e``, ``color``, ``rot`` and ``outer`` lines
in that order with single spaces, which is the canonical form.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InputError
from .graphs import Digraph, Edge, HalfEdge, PlanarBipartiteGraph, RotationSystem

__all__ = [
    "ParsedFile",
    "parse",
    "parse_digraph",
    "parse_bipartite",
    "serialize_digraph",
    "serialize_bipartite",
    "load_digraph",
    "load_bipartite",
]


class ParsedFile:
    def __init__(self, digraph: Digraph, rotation: RotationSystem | None, colors: tuple[str, ...] | None, outer):
        self.digraph = digraph
        self.rotation = rotation
        self.colors = colors
        self.outer = outer


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InputError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse(text: str) -> ParsedFile:
    n = None
    edges: list[tuple[int, int]] = []
    rots: dict[int, tuple[HalfEdge, ...]] = {}
    colors: dict[int, str] = {}
    outer = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "v":
            if n is not None:
                raise InputError(f"line {lineno}: repeated 'v' line")
            n = _int(rest.strip(), lineno)
            if n < 0:
                raise InputError(f"line {lineno}: negative vertex count")
        elif head == "e":
            toks = rest.split()
            if len(toks) != 2:
                raise InputError(f"line {lineno}: 'e' needs two endpoints")
            edges.append((_int(toks[0], lineno), _int(toks[1], lineno)))
        elif head == "rot":
            vert, sep, body = rest.partition(":")
            if not sep:
                raise InputError(f"line {lineno}: 'rot' needs a colon after the vertex")
            v = _int(vert.strip(), lineno)
            if v in rots:
                raise InputError(f"line {lineno}: repeated rotation for vertex {v}")
            try:
                rots[v] = tuple(HalfEdge.parse(t) for t in body.split())
            except InputError as exc:
                raise InputError(f"line {lineno}: {exc}") from None
        elif head == "color":
            toks = rest.split()
            if len(toks) != 2 or toks[1] not in ("A", "B"):
                raise InputError(f"line {lineno}: expected 'color <vertex> A|B'")
            colors[_int(toks[0], lineno)] = toks[1]
        elif head == "outer":
            try:
                outer = HalfEdge.parse(rest)
            except InputError as exc:
                raise InputError(f"line {lineno}: {exc}") from None
        else:
            raise InputError(f"line {lineno}: unknown directive {head!r}")
    if n is None:
        raise InputError("missing 'v <n>' line")
    d = Digraph(n, tuple(Edge(i, u, v) for i, (u, v) in enumerate(edges)))
    rotation = None
    if rots:
        if set(rots) != set(range(n)):
            raise InputError("rotation lines must cover every vertex exactly once")
        rotation = RotationSystem(tuple(rots[v] for v in range(n)))
        rotation.validate(d)
    color_tuple = None
    if colors:
        if set(colors) != set(range(n)):
            raise InputError("colour lines must cover every vertex exactly once")
        color_tuple = tuple(colors[v] for v in range(n))
    return ParsedFile(d, rotation, color_tuple, outer)


def parse_digraph(text: str) -> tuple[Digraph, RotationSystem | None]:
    p = parse(text)
    if p.colors is not None or p.outer is not None:
        raise InputError("digraph files take no 'color' or 'outer' lines")
    return p.digraph, p.rotation


def parse_bipartite(text: str) -> PlanarBipartiteGraph:
    p = parse(text)
    if p.colors is None:
        raise InputError("bipartite files need a 'color' line per vertex")
    if p.rotation is None:
        raise InputError("bipartite files need rotation lines")
    return PlanarBipartiteGraph(p.digraph, p.colors, p.rotation, p.outer)


def _dense(d: Digraph) -> dict[int, int]:
    return {e.id: i for i, e in enumerate(d.edges)}


def _rot_lines(rotation: RotationSystem, ids: dict[int, int]) -> list[str]:
    return [
        f"rot {v}: " + " ".join(f"{ids[h.edge]}{h.end}" for h in ring)
        for v, ring in enumerate(rotation.rotations)
    ]


def serialize_digraph(d: Digraph, rotation: RotationSystem | None = None) -> str:
    """Canonical text; edge ids are renumbered densely in edge order."""
    ids = _dense(d)
    lines = [f"v {d.vertex_count}"] + [f"e {e.init} {e.fin}" for e in d.edges]
    if rotation is not None:
        lines += _rot_lines(rotation, ids)
    return "\n".join(lines) + "\n"


def serialize_bipartite(g: PlanarBipartiteGraph) -> str:
    d = g.graph
    ids = _dense(d)
    lines = [f"v {d.vertex_count}"] + [f"e {e.init} {e.fin}" for e in d.edges]
    lines += [f"color {v} {c}" for v, c in enumerate(g.colors)]
    lines += _rot_lines(g.rotation, ids)
    if g.outer is not None:
        lines.append(f"outer {ids[g.outer.edge]}{g.outer.end}")
    return "\n".join(lines) + "\n"


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path} is not UTF-8 text") from None


def load_digraph(path) -> tuple[Digraph, RotationSystem | None]:
    return parse_digraph(_read(path))


def load_bipartite(path) -> PlanarBipartiteGraph:
    return parse_bipartite(_read(path))
