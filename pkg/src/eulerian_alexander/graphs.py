"""Directed multigraphs, minors, and plane embeddings given by rotation systems.

Conventions
-----------
* Vertices are dense integers ``0..n-1``.  Edge ids are arbitrary distinct
  integers and survive deletion/contraction unchanged.
* A half-edge is ``HalfEdge(edge, end)`` with ``end`` ``'+'`` for the init
  end and ``'-'`` for the fin end.  A half-edge doubles as a *dart*: the
  traversal of its edge that leaves the vertex the half-edge sits at.
* Rotations list the half-edges at a vertex counterclockwise.  Faces are
  traced by taking, after arriving through a dart, the half-edge that
  comes next clockwise after its twin.  This keeps the traced face on the
  left of every dart, so a bounded face is traced counterclockwise.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import EmbeddingError, InputError

__all__ = [
    "Edge",
    "Digraph",
    "EulerianDigraph",
    "HalfEdge",
    "RotationSystem",
    "AlternatingDimap",
    "PlanarBipartiteGraph",
    "MedialGraph",
    "PlanarDual",
    "is_eulerian",
    "as_eulerian",
    "transpose",
    "contract",
    "delete",
    "faces",
    "dart_next",
    "planar_dual",
    "plane_dual",
    "medial_graph",
    "is_alternating",
]


class Edge(NamedTuple):
    id: int
    init: int
    fin: int

    @property
    def is_loop(self) -> bool:
        return self.init == self.fin


@dataclass(frozen=True, eq=False)
class Digraph:
    """Directed multigraph; loops and parallel edges are allowed.

    Equality compares vertex count and edge tuple only, so an
    :class:`EulerianDigraph` equals the plain digraph with the same data.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError("vertex_count must be nonnegative")
        edges = tuple(Edge(*e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        seen = set()
        for e in edges:
            if e.id in seen:
                raise InputError(f"duplicate edge id {e.id}")
            seen.add(e.id)
            if not (0 <= e.init < self.vertex_count and 0 <= e.fin < self.vertex_count):
                raise InputError(f"edge {e.id} has an endpoint outside 0..{self.vertex_count - 1}")

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Digraph":
        """Edges get ids ``0, 1, ...`` in the order given."""
        return cls(n, tuple(Edge(i, u, v) for i, (u, v) in enumerate(pairs)))

    # -- lookups ------------------------------------------------------------
    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    @property
    def edge_map(self) -> dict[int, Edge]:
        m = self.__dict__.get("_edge_map")
        if m is None:
            m = {e.id: e for e in self.edges}
            object.__setattr__(self, "_edge_map", m)
        return m

    def edge(self, eid: int) -> Edge:
        try:
            return self.edge_map[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid}") from None

    def odeg(self, v: int) -> int:
        return sum(1 for e in self.edges if e.init == v)

    def indeg(self, v: int) -> int:
        return sum(1 for e in self.edges if e.fin == v)

    def pairs(self) -> list[tuple[int, int]]:
        return [(e.init, e.fin) for e in self.edges]

    def endpoint(self, h: "HalfEdge") -> int:
        e = self.edge(h.edge)
        return e.init if h.end == "+" else e.fin

    def is_connected(self) -> bool:
        """Connectivity of the underlying undirected multigraph."""
        n = self.vertex_count
        if n <= 1:
            return True
        adj = defaultdict(set)
        for e in self.edges:
            adj[e.init].add(e.fin)
            adj[e.fin].add(e.init)
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    def multiplicity(self, u: int, v: int) -> int:
        return sum(1 for e in self.edges if e.init == u and e.fin == v)

    def is_symmetric(self) -> bool:
        """Whether every ordered pair has as many edges as its reverse."""
        counts = defaultdict(int)
        for e in self.edges:
            counts[e.init, e.fin] += 1
        return all(counts[u, v] == counts[v, u] for (u, v) in counts)


@dataclass(frozen=True, eq=False)
class EulerianDigraph(Digraph):
    """A connected digraph balanced at every vertex, with cached degrees."""

    outdegrees: tuple[int, ...] = field(default=(), compare=False, repr=False)
    indegrees: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        super().__post_init__()
        out = [0] * self.vertex_count
        inn = [0] * self.vertex_count
        for e in self.edges:
            out[e.init] += 1
            inn[e.fin] += 1
        object.__setattr__(self, "outdegrees", tuple(out))
        object.__setattr__(self, "indegrees", tuple(inn))
        if out != inn:
            bad = [v for v in range(self.vertex_count) if out[v] != inn[v]]
            raise InputError(f"not balanced at vertices {bad}")
        if not self.is_connected():
            raise InputError("underlying graph is not connected")

    def odeg(self, v: int) -> int:
        return self.outdegrees[v]

    def indeg(self, v: int) -> int:
        return self.indegrees[v]


def is_eulerian(d: Digraph) -> bool:
    if not d.is_connected():
        return False
    bal = [0] * d.vertex_count
    for e in d.edges:
        bal[e.init] += 1
        bal[e.fin] -= 1
    return not any(bal)


def as_eulerian(d: Digraph) -> EulerianDigraph:
    """Validate ``d`` and return it as an :class:`EulerianDigraph`."""
    if isinstance(d, EulerianDigraph):
        return d
    return EulerianDigraph(d.vertex_count, d.edges)


def _same_kind(d: Digraph, n: int, edges) -> Digraph:
    if isinstance(d, EulerianDigraph):
        return EulerianDigraph(n, tuple(edges))
    return Digraph(n, tuple(edges))


def transpose(d: Digraph) -> Digraph:
    return _same_kind(d, d.vertex_count, (Edge(e.id, e.fin, e.init) for e in d.edges))


def delete(d: Digraph, edge_set: Iterable[int]) -> Digraph:
    drop = set(edge_set)
    for eid in drop:
        d.edge(eid)
    return Digraph(d.vertex_count, tuple(e for e in d.edges if e.id not in drop))


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def contraction_map(d: Digraph, edge_set: Iterable[int]) -> list[int]:
    """Vertex relabelling induced by contracting ``edge_set``.

    Classes are numbered densely in order of their smallest old vertex.
    """
    dsu = _DSU(d.vertex_count)
    for eid in edge_set:
        e = d.edge(eid)
        dsu.union(e.init, e.fin)
    label: dict[int, int] = {}
    out = []
    for v in range(d.vertex_count):
        r = dsu.find(v)
        if r not in label:
            label[r] = len(label)
        out.append(label[r])
    return out


def contract(d: Digraph, edge_set: Iterable[int]) -> Digraph:
    """Contract ``edge_set``; edges that become loops are kept.

    The contracted edges themselves disappear; all other edges keep their
    ids.  Contraction preserves balance and connectivity, so an
    :class:`EulerianDigraph` stays one.
    """
    edge_set = list(edge_set)
    gone = set(edge_set)
    if len(gone) != len(edge_set):
        raise InputError("repeated edge in contraction set")
    relabel = contraction_map(d, edge_set)
    n = max(relabel) + 1 if relabel else 0
    edges = tuple(Edge(e.id, relabel[e.init], relabel[e.fin]) for e in d.edges if e.id not in gone)
    return _same_kind(d, n, edges)


# ---------------------------------------------------------------------------
# embeddings


class HalfEdge(NamedTuple):
    edge: int
    end: str  # '+' init end, '-' fin end

    @property
    def twin(self) -> "HalfEdge":
        return HalfEdge(self.edge, "-" if self.end == "+" else "+")

    def __str__(self) -> str:
        return f"{self.edge}{self.end}"

    @classmethod
    def parse(cls, token: str) -> "HalfEdge":
        token = token.strip()
        if len(token) < 2 or token[-1] not in "+-":
            raise InputError(f"bad half-edge token {token!r}")
        try:
            return cls(int(token[:-1]), token[-1])
        except ValueError:
            raise InputError(f"bad half-edge token {token!r}") from None


def _dart_key(h: HalfEdge) -> tuple[int, int]:
    return (h.edge, 0 if h.end == "+" else 1)


@dataclass(frozen=True)
class RotationSystem:
    """Counterclockwise cyclic order of half-edges around each vertex."""

    rotations: tuple[tuple[HalfEdge, ...], ...]

    def __post_init__(self):
        rot = tuple(tuple(HalfEdge(*h) for h in r) for r in self.rotations)
        object.__setattr__(self, "rotations", rot)

    def validate(self, d: Digraph) -> None:
        if len(self.rotations) != d.vertex_count:
            raise EmbeddingError("rotation system must list every vertex")
        seen = set()
        for v, rot in enumerate(self.rotations):
            for h in rot:
                if h in seen:
                    raise EmbeddingError(f"half-edge {h} listed twice")
                seen.add(h)
                if h.edge not in d.edge_map:
                    raise EmbeddingError(f"half-edge {h} names an unknown edge")
                if d.endpoint(h) != v:
                    raise EmbeddingError(f"half-edge {h} is not incident to vertex {v}")
        if len(seen) != 2 * len(d.edges):
            raise EmbeddingError("some half-edges are missing from the rotation system")

    def position(self) -> dict[HalfEdge, tuple[int, int]]:
        pos = self.__dict__.get("_pos")
        if pos is None:
            pos = {h: (v, i) for v, rot in enumerate(self.rotations) for i, h in enumerate(rot)}
            object.__setattr__(self, "_pos", pos)
        return pos


def dart_next(rs: RotationSystem, h: HalfEdge) -> HalfEdge:
    """Successor of dart ``h`` along the face on its left."""
    tw = h.twin
    v, i = rs.position()[tw]
    rot = rs.rotations[v]
    return rot[(i - 1) % len(rot)]


def faces(rs: RotationSystem, d: Digraph, *, check_planar: bool = True) -> list[tuple[HalfEdge, ...]]:
    """Face cycles of the embedding, each a tuple of darts with the face on the left.

    Faces are listed in order of their smallest dart, and each cycle starts
    at that dart.  An edgeless graph has one face with an empty boundary.
    With ``check_planar`` the embedding must satisfy Euler's formula for
    the sphere (connected input only).
    """
    rs.validate(d)
    darts = sorted(rs.position(), key=_dart_key)
    seen: set[HalfEdge] = set()
    out = []
    for start in darts:
        if start in seen:
            continue
        cyc = []
        h = start
        while h not in seen:
            seen.add(h)
            cyc.append(h)
            h = dart_next(rs, h)
        if h != start:
            raise EmbeddingError("face traversal does not close")
        out.append(tuple(cyc))
    if not d.edges:
        out = [()]
    if check_planar and d.is_connected() and d.vertex_count > 0:
        chi = d.vertex_count - len(d.edges) + len(out)
        if chi != 2:
            raise EmbeddingError(f"embedding has Euler characteristic {chi}, not 2")
    return out


def is_alternating(d: Digraph, rs: RotationSystem) -> bool:
    """Whether in/out half-edges alternate around every vertex."""
    rs.validate(d)
    for rot in rs.rotations:
        if len(rot) % 2:
            return False
        for a, b in zip(rot, rot[1:] + rot[:1]):
            if a.end == b.end:
                return False
    return True


@dataclass(frozen=True)
class AlternatingDimap:
    digraph: EulerianDigraph
    rotation: RotationSystem

    def __post_init__(self):
        object.__setattr__(self, "digraph", as_eulerian(self.digraph))
        if not is_alternating(self.digraph, self.rotation):
            raise InputError("edges do not alternate in/out around every vertex")
        faces(self.rotation, self.digraph)


@dataclass(frozen=True)
class PlanarBipartiteGraph:
    """Connected plane multigraph with a proper A/B vertex colouring.

    ``graph`` stores each undirected edge with an arbitrary init/fin so that
    half-edge tokens have a meaning.  ``outer`` names a dart whose left face
    is the unbounded one; by default the largest face is taken (ties go to
    the face containing the smallest dart).
    """

    graph: Digraph
    colors: tuple[str, ...]
    rotation: RotationSystem
    outer: HalfEdge | None = None

    def __post_init__(self):
        g = self.graph
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != g.vertex_count or any(c not in ("A", "B") for c in colors):
            raise InputError("need one colour 'A' or 'B' per vertex")
        for e in g.edges:
            if colors[e.init] == colors[e.fin]:
                raise InputError(f"edge {e.id} joins two vertices of colour {colors[e.init]}")
        if g.vertex_count == 0 or not g.is_connected():
            raise InputError("planar bipartite graph must be connected and nonempty")
        fs = faces(self.rotation, g)
        if self.outer is not None:
            outer = HalfEdge(*self.outer)
            if outer not in self.rotation.position():
                raise InputError(f"outer dart {outer} is not a half-edge of the graph")
            object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "_faces", fs)

    @property
    def face_cycles(self) -> list[tuple[HalfEdge, ...]]:
        return self.__dict__["_faces"]

    def face_of(self) -> dict[HalfEdge, int]:
        return {h: i for i, cyc in enumerate(self.face_cycles) for h in cyc}

    @property
    def outer_face(self) -> int:
        if self.outer is not None:
            return self.face_of()[self.outer]
        fs = self.face_cycles
        return max(range(len(fs)), key=lambda i: (len(fs[i]), -i))

    def head(self, h: HalfEdge) -> int:
        """Vertex a dart arrives at."""
        return self.graph.endpoint(h.twin)

    def a_dart(self, eid: int) -> HalfEdge:
        """The dart of edge ``eid`` leaving its A-coloured endpoint."""
        e = self.graph.edge(eid)
        return HalfEdge(eid, "+" if self.colors[e.init] == "A" else "-")


@dataclass(frozen=True)
class PlanarDual:
    """Planar dual of a plane bipartite graph, oriented as an alternating dimap.

    ``face_vertex[i]`` is the dual vertex of face ``i`` of the primal graph;
    dual edges reuse primal edge ids.
    """

    dimap: AlternatingDimap
    primal_faces: tuple[tuple[HalfEdge, ...], ...]

    @property
    def digraph(self) -> EulerianDigraph:
        return self.dimap.digraph

    @property
    def rotation(self) -> RotationSystem:
        return self.dimap.rotation


def plane_dual(d: Digraph, rs: RotationSystem) -> tuple[Digraph, RotationSystem]:
    """Unoriented plane dual: dual edge ``e`` runs from the face right of dart
    ``e+`` to the face on its left."""
    fs = faces(rs, d)
    face_of = {h: i for i, cyc in enumerate(fs) for h in cyc}
    edges = []
    for e in d.edges:
        left = face_of[HalfEdge(e.id, "+")]
        right = face_of[HalfEdge(e.id, "-")]
        edges.append(Edge(e.id, right, left))
    rots = []
    for cyc in fs:
        rots.append(tuple(HalfEdge(h.edge, "-" if h.end == "+" else "+") for h in cyc))
    return Digraph(len(fs), tuple(edges)), RotationSystem(tuple(rots))


def planar_dual(g: PlanarBipartiteGraph) -> PlanarDual:
    """Dual alternating dimap; each dual edge has the A endpoint on its left.

    The dual vertex of face ``f`` lists its half-edges in the order the
    face boundary is traced, which is counterclockwise around ``f``.
    """
    fs = g.face_cycles
    face_of = g.face_of()
    edges = []
    for e in g.graph.edges:
        x = g.a_dart(e.id)
        edges.append(Edge(e.id, face_of[x.twin], face_of[x]))
    rots = []
    for cyc in fs:
        rot = []
        for h in cyc:
            # the face lies left of h; it is the dual fin iff h leaves the A end
            rot.append(HalfEdge(h.edge, "-" if h == g.a_dart(h.edge) else "+"))
        rots.append(tuple(rot))
    dual = EulerianDigraph(len(fs), tuple(edges))
    return PlanarDual(AlternatingDimap(dual, RotationSystem(tuple(rots))), tuple(fs))


@dataclass(frozen=True)
class MedialGraph:
    """Medial graph with one vertex per primal edge and one edge per dart.

    Medial edge ``medial_id[x]`` cuts the corner of the face left of dart
    ``x`` at the vertex ``x`` arrives at; it is stored directed from the
    vertex of ``x``'s edge to the vertex of the next dart's edge.
    """

    digraph: Digraph
    rotation: RotationSystem
    vertex_of_edge: dict[int, int]
    medial_id: dict[HalfEdge, int]
    dart_of: dict[int, HalfEdge]


def medial_graph(g: PlanarBipartiteGraph) -> MedialGraph:
    gd = g.graph
    if not gd.edges:
        raise InputError("medial graph of an edgeless graph is empty")
    rs = g.rotation
    vertex_of_edge = {e.id: i for i, e in enumerate(gd.edges)}
    darts = sorted(rs.position(), key=_dart_key)
    medial_id = {x: i for i, x in enumerate(darts)}
    prev = {}
    edges = []
    for x in darts:
        nx = dart_next(rs, x)
        prev[nx] = x
        edges.append(Edge(medial_id[x], vertex_of_edge[x.edge], vertex_of_edge[nx.edge]))
    rots = []
    for e in gd.edges:
        d, dp = HalfEdge(e.id, "+"), HalfEdge(e.id, "-")
        rots.append(
            (
                HalfEdge(medial_id[d], "+"),
                HalfEdge(medial_id[prev[d]], "-"),
                HalfEdge(medial_id[dp], "+"),
                HalfEdge(medial_id[prev[dp]], "-"),
            )
        )
    m = Digraph(len(gd.edges), tuple(edges))
    rot = RotationSystem(tuple(rots))
    faces(rot, m)
    return MedialGraph(m, rot, vertex_of_edge, medial_id, {i: x for x, i in medial_id.items()})
