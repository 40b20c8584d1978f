"""Positive special alternating links and their Kauffman and Crowell state models.

The diagram is combinatorial.  Its shadow is the medial graph of a plane
bipartite graph ``G``, its regions are the medial faces, and each strand is
oriented so that every A-region has its boundary running counterclockwise
(region on the left) and every B-region clockwise.  Over/under information
follows from requiring all crossings to be positive.

Crossing layout
---------------
The four ends at a crossing are stored counterclockwise, starting with the
outgoing end of the over strand::

            under-out (1)
                  ^
         [t]      |     [-1]
                  |
    over-in (2) --+--> over-out (0)
                  |
        [-t]      |      [1]
                  |
            under-in (3)

Sector ``i`` is the corner between ends ``i`` and ``i + 1``.  Bracketed
values are the Kauffman corner labels.  Sector 2 sits between the two
incoming ends, so a marker there is a black hole.  Sector 1 is always an
A-region and sector 3 a B-region.  Sectors 0 and 2 are faces of ``G``, that
is, vertices of the dual dimap ``D``.  The dual edge runs from the sector-2
face into the sector-0 face.

Crowell's graph has the crossings as vertices.  Each strand segment
becomes an edge from the crossing where it is the over strand to the one
where it is the under strand.  The edge has weight ``1`` if it reaches
that crossing at the under-in end, and ``-t`` if it reaches the under-out
end.  With this rule the clockwise Crowell regions around B vertices are
the ones weighted ``1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, InvariantViolation
from .graphs import (
    Digraph,
    Edge,
    HalfEdge,
    MedialGraph,
    PlanarBipartiteGraph,
    PlanarDual,
    RotationSystem,
    faces,
    medial_graph,
    planar_dual,
)
from .polynomials import ONE, ZERO, IntPoly, T, canonical, substitute_neg_t
from .trees import arborescences, classify, spanning_trees

__all__ = [
    "OVER_OUT",
    "UNDER_OUT",
    "OVER_IN",
    "UNDER_IN",
    "BLACK_HOLE_SECTOR",
    "SECTOR_LABELS",
    "Region",
    "Crossing",
    "LinkDiagram",
    "KauffmanState",
    "CrowellGraph",
    "GoldBlue",
    "build_link",
    "kauffman_states",
    "kauffman_states_brute_force",
    "kauffman_state_sum",
    "kauffman_polynomial",
    "crowell_graph",
    "crowell_state_sum",
    "crowell_polynomial",
    "gold_blue_regions",
    "a_to_b_counts",
    "alexander_normal_form",
]

OVER_OUT, UNDER_OUT, OVER_IN, UNDER_IN = range(4)
BLACK_HOLE_SECTOR = 2
MINUS_T = IntPoly((0, -1))
SECTOR_LABELS: tuple[IntPoly, ...] = (IntPoly((-1,)), T, MINUS_T, ONE)


def alexander_normal_form(p: IntPoly) -> IntPoly:
    """Canonical form of ``p(-t)``; turns ``Delta_L(t)`` into a positive polynomial."""
    return canonical(substitute_neg_t(p))


@dataclass(frozen=True)
class Region:
    """A medial face.

    ``kind`` is ``'vertex'`` (``ref`` a vertex of ``G``) or ``'face'``
    (``ref`` a face of ``G``, i.e. a vertex of the dual dimap).
    ``orientation`` is ``'ccw'`` when every boundary strand keeps the
    region on its left, ``'cw'`` when every strand keeps it on the right,
    and ``None`` for mixed boundaries.
    """

    index: int
    kind: str
    ref: int
    color: str | None
    orientation: str | None
    boundary: tuple[HalfEdge, ...]


@dataclass(frozen=True)
class Crossing:
    """Ends are half-edges of the oriented link graph, in the layout order above."""

    edge: int
    ends: tuple[HalfEdge, HalfEdge, HalfEdge, HalfEdge]
    regions: tuple[int, int, int, int]
    sign: int = 1


@dataclass(frozen=True)
class LinkDiagram:
    source: PlanarBipartiteGraph
    medial: MedialGraph
    dual: PlanarDual
    strands: Digraph
    rotation: RotationSystem
    crossings: tuple[Crossing, ...]
    regions: tuple[Region, ...]
    exterior: int
    marked: tuple[int, int]
    distinguished_edge: int

    @property
    def crossing_of_edge(self) -> dict[int, int]:
        return {c.edge: i for i, c in enumerate(self.crossings)}

    def region_of_dual_vertex(self, face: int) -> int:
        return next(r.index for r in self.regions if r.kind == "face" and r.ref == face)

    def region_of_vertex(self, vertex: int) -> int:
        return next(r.index for r in self.regions if r.kind == "vertex" and r.ref == vertex)

    def adjacent(self, r1: int, r2: int) -> bool:
        """Whether two regions share a boundary strand segment."""
        for c in self.crossings:
            for i in range(4):
                if {c.regions[i], c.regions[(i + 1) % 4]} == {r1, r2}:
                    return True
        return False


def distinguished_edge(dual: PlanarDual, root: int) -> int:
    """Lowest-id non-loop dual edge ending at ``root``, else the lowest-id one."""
    ends = sorted(e.id for e in dual.digraph.edges if e.fin == root)
    if not ends:
        raise InputError(f"dual vertex {root} has no incoming edge")
    proper = [eid for eid in ends if not dual.digraph.edge(eid).is_loop]
    return (proper or ends)[0]


def build_link(g: PlanarBipartiteGraph) -> LinkDiagram:
    """Oriented positive diagram on the medial graph of ``g``."""
    if not g.graph.edges:
        raise InputError("the link of an edgeless graph is empty")
    med = medial_graph(g)
    dual = planar_dual(g)
    face_of = g.face_of()

    # orient every medial edge so A-regions lie on its left
    forward = {}
    for mid, x in med.dart_of.items():
        forward[mid] = g.colors[g.head(x)] == "B"
    strand_edges = []
    for e in med.digraph.edges:
        strand_edges.append(e if forward[e.id] else Edge(e.id, e.fin, e.init))
    strands = Digraph(med.digraph.vertex_count, tuple(strand_edges))

    def relabel(h: HalfEdge) -> HalfEdge:
        return h if forward[h.edge] else h.twin

    rot = RotationSystem(tuple(tuple(relabel(h) for h in r) for r in med.rotation.rotations))
    fcs = faces(rot, strands)

    regions = []
    region_of_dart = {}
    for idx, cyc in enumerate(fcs):
        kinds = set()
        for h in cyc:
            x = med.dart_of[h.edge]
            on_face_side = (h.end == "+") == forward[h.edge]
            kinds.add(("face", face_of[x]) if on_face_side else ("vertex", g.head(x)))
            region_of_dart[h] = idx
        if len(kinds) != 1:
            raise InvariantViolation(f"medial face {idx} meets several primal features {sorted(kinds)}")
        kind, ref = kinds.pop()
        ends = {h.end for h in cyc}
        orientation = ("ccw" if ends == {"+"} else "cw") if len(ends) == 1 else None
        color = g.colors[ref] if kind == "vertex" else None
        regions.append(Region(idx, kind, ref, color, orientation, cyc))
    for r in regions:
        if r.color == "A" and r.orientation != "ccw" or r.color == "B" and r.orientation != "cw":
            raise InvariantViolation(f"region {r.index} of colour {r.color} has orientation {r.orientation}")

    crossings = []
    for v, ring in enumerate(rot.rotations):
        outs = [i for i in range(4) if ring[i].end == "+"]
        start = next((i for i in outs if (i + 1) % 4 in outs), None)
        if len(outs) != 2 or start is None:
            raise InvariantViolation(f"crossing {v} does not have two adjacent outgoing ends")
        ends = tuple(ring[(start + k) % 4] for k in range(4))
        regs = tuple(region_of_dart[h] for h in ends)
        crossings.append(Crossing(g.graph.edges[v].id, ends, regs))

    _check_alternating(strands, crossings)
    _check_labels(regions, crossings, dual)

    ext_face = g.outer_face
    exterior = next(r.index for r in regions if r.kind == "face" and r.ref == ext_face)
    e0 = distinguished_edge(dual, ext_face)
    c0 = next(c for c in crossings if c.edge == e0)
    if c0.regions[0] != exterior:
        raise InvariantViolation("exterior region is not the head sector of the distinguished edge")
    return LinkDiagram(
        g, med, dual, strands, rot, tuple(crossings), tuple(regions), exterior, (exterior, c0.regions[1]), e0
    )


def _end_roles(crossings) -> dict[HalfEdge, int]:
    return {h: i for c in crossings for i, h in enumerate(c.ends)}


def _check_alternating(strands: Digraph, crossings) -> None:
    role = _end_roles(crossings)
    for e in strands.edges:
        tail, head = role[HalfEdge(e.id, "+")], role[HalfEdge(e.id, "-")]
        if (tail, head) not in ((OVER_OUT, UNDER_IN), (UNDER_OUT, OVER_IN)):
            raise InvariantViolation(f"strand segment {e.id} does not alternate over/under")


def _check_labels(regions, crossings, dual: PlanarDual) -> None:
    for c in crossings:
        kinds = [regions[i] for i in c.regions]
        if kinds[1].color != "A" or kinds[3].color != "B":
            raise InvariantViolation(f"crossing {c.edge}: vertex sectors are not A then B")
        e = dual.digraph.edge(c.edge)
        if (kinds[2].kind, kinds[2].ref, kinds[0].kind, kinds[0].ref) != ("face", e.init, "face", e.fin):
            raise InvariantViolation(f"crossing {c.edge}: dual edge does not run from sector 2 to sector 0")


# ---------------------------------------------------------------------------
# Kauffman states


@dataclass(frozen=True)
class KauffmanState:
    """``markers[i]`` is the sector holding the marker of crossing ``i``."""

    markers: tuple[int, ...]
    weight: IntPoly
    black_holes: int

    @property
    def signed_weight(self) -> IntPoly:
        return self.weight if self.black_holes % 2 == 0 else -self.weight


def _state(markers: Iterable[int]) -> KauffmanState:
    markers = tuple(markers)
    w = ONE
    for s in markers:
        w = w * SECTOR_LABELS[s]
    return KauffmanState(markers, w, sum(1 for s in markers if s == BLACK_HOLE_SECTOR))


def _resolve_marked(link: LinkDiagram, marked) -> tuple[int, int]:
    """Return ``(face_region, vertex_region)`` for an adjacent marked pair."""
    a, b = link.marked if marked is None else marked
    if not link.adjacent(a, b):
        raise InputError(f"marked regions {a} and {b} are not adjacent")
    ra, rb = link.regions[a], link.regions[b]
    if ra.kind == rb.kind:
        raise InputError("adjacent regions must have different checkerboard colours")
    return (a, b) if ra.kind == "face" else (b, a)


def _child_map(d: Digraph, tree, root: int) -> dict[int, int]:
    """Edge id -> its endpoint farther from ``root``."""
    kt = classify(d, tree, root)
    out = {}
    for eid in kt.edges:
        e = d.edge(eid)
        out[eid] = e.fin if eid in kt.away_edges else e.init
    return out


def kauffman_states(link: LinkDiagram, marked: tuple[int, int] | None = None) -> list[KauffmanState]:
    """One state per spanning tree of ``G``, in the order of :func:`spanning_trees`.

    The tree in ``G`` and the complementary tree in ``D`` are rooted at the
    two marked regions; each crossing's marker sits in the region of the
    child endpoint of its tree edge.
    """
    face_reg, vert_reg = _resolve_marked(link, marked)
    g = link.source.graph
    dgraph = link.dual.digraph
    r = link.regions[face_reg].ref
    rprime = link.regions[vert_reg].ref
    where = link.crossing_of_edge
    all_ids = set(g.edge_ids)
    states = []
    for tprime in spanning_trees(g):
        t = sorted(all_ids - set(tprime))
        markers = [None] * len(link.crossings)
        for eid, child in _child_map(g, tprime, rprime).items():
            target = link.region_of_vertex(child)
            markers[where[eid]] = link.crossings[where[eid]].regions.index(target)
        for eid, child in _child_map(dgraph, t, r).items():
            target = link.region_of_dual_vertex(child)
            markers[where[eid]] = link.crossings[where[eid]].regions.index(target)
        states.append(_state(markers))
    return states


def kauffman_states_brute_force(link: LinkDiagram, marked: tuple[int, int] | None = None) -> list[KauffmanState]:
    """Every corner assignment that covers each unmarked region exactly once."""
    face_reg, vert_reg = _resolve_marked(link, marked)
    forbidden = {face_reg, vert_reg}
    crossings = link.crossings
    out = []
    used: set[int] = set()
    chosen: list[int] = []

    def rec(i: int):
        if i == len(crossings):
            out.append(_state(chosen))
            return
        for s in range(4):
            reg = crossings[i].regions[s]
            if reg in forbidden or reg in used:
                continue
            used.add(reg)
            chosen.append(s)
            rec(i + 1)
            chosen.pop()
            used.discard(reg)

    rec(0)
    return out


def kauffman_state_sum(link: LinkDiagram, marked: tuple[int, int] | None = None) -> IntPoly:
    """``sum_S <L|S> (-1)^b(S)``, equal to ``Delta_L(t)`` up to a unit."""
    total = ZERO
    for s in kauffman_states(link, marked):
        total = total + s.signed_weight
    return total


def kauffman_polynomial(link: LinkDiagram, marked: tuple[int, int] | None = None) -> IntPoly:
    return alexander_normal_form(kauffman_state_sum(link, marked))


def a_to_b_counts(g: PlanarBipartiteGraph, root: int) -> list[int]:
    """For each spanning tree of ``g`` oriented toward ``root``, the number
    of edges running from an A vertex to a B vertex."""
    counts = []
    for tree in spanning_trees(g.graph):
        n = 0
        for eid, child in _child_map(g.graph, tree, root).items():
            n += g.colors[child] == "A"
        counts.append(n)
    return counts


# ---------------------------------------------------------------------------
# Crowell


@dataclass(frozen=True)
class CrowellGraph:
    """Weighted digraph on crossings; ``weights[id]`` is ``1`` or ``-t``.

    ``rotation`` is the embedding inherited from the diagram.
    """

    digraph: Digraph
    weights: dict[int, IntPoly]
    rotation: RotationSystem


def crowell_graph(link: LinkDiagram) -> CrowellGraph:
    role = _end_roles(link.crossings)
    owner = {h: i for i, c in enumerate(link.crossings) for h in c.ends}
    edges, weights, over_end = [], {}, {}
    for e in link.strands.edges:
        tail, head = HalfEdge(e.id, "+"), HalfEdge(e.id, "-")
        over, under = (tail, head) if role[tail] in (OVER_OUT, OVER_IN) else (head, tail)
        if role[under] not in (UNDER_OUT, UNDER_IN):
            raise InvariantViolation(f"segment {e.id} has no under end")
        edges.append(Edge(e.id, owner[over], owner[under]))
        weights[e.id] = ONE if role[under] == UNDER_IN else MINUS_T
        over_end[e.id] = over
    d = Digraph(len(link.crossings), tuple(edges))
    rot = RotationSystem(
        tuple(
            tuple(HalfEdge(h.edge, "+" if h == over_end[h.edge] else "-") for h in c.ends) for c in link.crossings
        )
    )
    rot.validate(d)
    for v in range(d.vertex_count):
        outs = sorted(weights[e.id] == ONE for e in d.edges if e.init == v)
        ins = sorted(weights[e.id] == ONE for e in d.edges if e.fin == v)
        if outs != [False, True] or ins != [False, True]:
            raise InvariantViolation(f"Crowell vertex {v} lacks one edge of each weight in each direction")
    return CrowellGraph(d, weights, rot)


def crowell_state_sum(cg: CrowellGraph, root: int) -> IntPoly:
    """``sum_A wt_C(A)`` over arborescences reachable from ``root``."""
    if not 0 <= root < cg.digraph.vertex_count:
        raise InputError(f"vertex {root} is not a crossing")
    total = ZERO
    for arb in arborescences(cg.digraph, root):
        w = ONE
        for eid in arb:
            w = w * cg.weights[eid]
        total = total + w
    return total


def crowell_polynomial(cg: CrowellGraph, root: int) -> IntPoly:
    return alexander_normal_form(crowell_state_sum(cg, root))


@dataclass(frozen=True)
class GoldBlue:
    """Clockwise regions of the Crowell graph split by their edge weights.

    Regions are face indices of ``faces(cg.rotation, cg.digraph)``;
    ``edge_color`` gives the colour of the clockwise region each edge borders.
    """

    gold: tuple[int, ...]
    blue: tuple[int, ...]
    edge_color: dict[int, str]
    region_of_edge: dict[int, int]

    @property
    def m1(self) -> int:
        return len(self.gold)

    @property
    def m2(self) -> int:
        return len(self.blue)


def gold_blue_regions(cg: CrowellGraph) -> GoldBlue:
    """Raises :class:`InvariantViolation` on a clockwise region of mixed weight
    or an edge that does not border exactly one clockwise region."""
    fcs = faces(cg.rotation, cg.digraph)
    gold, blue = [], []
    edge_color, region_of_edge = {}, {}
    for idx, cyc in enumerate(fcs):
        if not cyc or any(h.end != "-" for h in cyc):
            continue
        ws = {cg.weights[h.edge] for h in cyc}
        if ws == {ONE}:
            color = "blue"
            blue.append(idx)
        elif ws == {MINUS_T}:
            color = "gold"
            gold.append(idx)
        else:
            raise InvariantViolation(f"clockwise region {idx} has mixed edge weights")
        for h in cyc:
            if h.edge in edge_color:
                raise InvariantViolation(f"edge {h.edge} borders two clockwise regions")
            edge_color[h.edge] = color
            region_of_edge[h.edge] = idx
    missing = set(cg.digraph.edge_ids) - set(edge_color)
    if missing:
        raise InvariantViolation(f"edges {sorted(missing)} border no clockwise region")
    return GoldBlue(tuple(gold), tuple(blue), edge_color, region_of_edge)
