"""Weight-preserving bijection from spanning trees of ``D`` to Crowell arborescences.

``phi`` smooths every crossing of the diagram according to a spanning tree
``T`` of the dual dimap and reads off an Eulerian tour of the Crowell
graph.  ``psi`` keeps the first edge entering each non-root vertex of that
tour.  The composite ``big_f`` should be a bijection with
``wt_C(F(T)) = wt_K(T) * t^(m2 - 1)``, where ``wt_K(T) = t^(|T| - k)`` for a
``k``-spanning tree rooted at the exterior vertex and ``m2`` counts blue
regions.  Everything here is checked exhaustively, never assumed.

Pairings at a crossing, using the layout of :mod:`.links` (in-ends are
the under ends 1 and 3, out-ends the over ends 0 and 2)::

    e in T      1 -> 2, 3 -> 0    hugs the A and B corners
    e not in T  1 -> 0, 3 -> 2    hugs the two face corners
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InconsistencyError, InputError
from .graphs import HalfEdge
from .links import (
    OVER_IN,
    OVER_OUT,
    UNDER_IN,
    UNDER_OUT,
    CrowellGraph,
    GoldBlue,
    LinkDiagram,
    crowell_graph,
    gold_blue_regions,
)
from .polynomials import ONE, IntPoly
from .trees import arborescences, classify, spanning_trees

__all__ = [
    "TourPairing",
    "BijectionSetup",
    "setup",
    "pairing",
    "phi",
    "psi",
    "big_f",
    "crowell_weight",
    "kauffman_weight",
    "WeightRow",
    "WeightReport",
    "verify_weight_relation",
    "LemmaReport",
    "lemma_checks",
]

TREE_PAIRS = ((UNDER_OUT, OVER_IN), (UNDER_IN, OVER_OUT))
NON_TREE_PAIRS = ((UNDER_OUT, OVER_OUT), (UNDER_IN, OVER_IN))


@dataclass(frozen=True)
class BijectionSetup:
    """Fixed data of the construction.

    ``root_face`` is the dual vertex of the exterior, ``e0`` the
    distinguished dual edge into it, ``v`` the crossing of ``e0`` and
    ``f_v`` the exterior boundary edge of the Crowell graph ending at ``v``.
    """

    link: LinkDiagram
    crowell: CrowellGraph
    colors: GoldBlue
    root_face: int
    e0: int
    v: int
    f_v: int
    end_at: dict[HalfEdge, tuple[int, int]] = field(repr=False)

    def vertex_of(self, dual_edge: int) -> int:
        return self.link.crossing_of_edge[dual_edge]


def setup(link: LinkDiagram) -> BijectionSetup:
    cg = crowell_graph(link)
    gb = gold_blue_regions(cg)
    root_face = link.regions[link.exterior].ref
    e0 = link.distinguished_edge
    v = link.crossing_of_edge[e0]
    boundary = {h.edge for h in link.regions[link.exterior].boundary}
    cands = sorted(eid for eid in boundary if cg.digraph.edge(eid).fin == v)
    if not cands:
        raise InconsistencyError("no exterior boundary edge ends at the distinguished crossing")
    end_at = {h: (ci, p) for ci, c in enumerate(link.crossings) for p, h in enumerate(c.ends)}
    return BijectionSetup(link, cg, gb, root_face, e0, v, cands[0], end_at)


@dataclass(frozen=True)
class TourPairing:
    """``pairs[c]`` lists ``(in_end, out_end)`` positions used at crossing ``c``."""

    pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]


def pairing(s: BijectionSetup, tree) -> TourPairing:
    in_tree = set(tree)
    return TourPairing(
        tuple(TREE_PAIRS if c.edge in in_tree else NON_TREE_PAIRS for c in s.link.crossings)
    )


def phi(s: BijectionSetup, tree) -> tuple[int, ...]:
    """Eulerian tour (Crowell edge ids) starting with ``f_v``.

    Raises :class:`InconsistencyError` if the pairing closes up before
    using every edge, i.e. the smoothing has more than one component.
    """
    tree = tuple(sorted(tree))
    pr = pairing(s, tree)
    crossings = s.link.crossings
    cg = s.crowell.digraph
    tour = []
    eid = s.f_v
    seen = set()
    while eid not in seen:
        seen.add(eid)
        tour.append(eid)
        # the Crowell edge arrives at its under end
        ci, pos = _under_end(s, eid)
        out_pos = dict(pr.pairs[ci])[pos]
        eid = crossings[ci].ends[out_pos].edge
    if eid != s.f_v or len(tour) != len(cg.edges):
        raise InconsistencyError(f"pairing of tree {list(tree)} does not give a single closed tour")
    return tuple(tour)


def _under_end(s: BijectionSetup, eid: int) -> tuple[int, int]:
    for h in (HalfEdge(eid, "+"), HalfEdge(eid, "-")):
        ci, p = s.end_at[h]
        if p in (UNDER_OUT, UNDER_IN):
            return ci, p
    raise InconsistencyError(f"edge {eid} has no under end")


def psi(s: BijectionSetup, tour) -> tuple[int, ...]:
    """First edge entering each vertex other than ``v``, as sorted ids."""
    cg = s.crowell.digraph
    tour = tuple(tour)
    if not tour or tour[0] != s.f_v:
        raise InputError("tour must begin with f_v")
    if sorted(tour) != sorted(cg.edge_ids):
        raise InputError("tour must use every edge exactly once")
    for a, b in zip(tour, tour[1:] + tour[:1]):
        if cg.edge(a).fin != cg.edge(b).init:
            raise InputError(f"edges {a} and {b} are not consecutive")
    first = {}
    for eid in tour:
        u = cg.edge(eid).fin
        if u != s.v and u not in first:
            first[u] = eid
    return tuple(sorted(first.values()))


def big_f(s: BijectionSetup, tree) -> tuple[int, ...]:
    return psi(s, phi(s, tree))


def crowell_weight(s: BijectionSetup, arb) -> IntPoly:
    w = ONE
    for eid in arb:
        w = w * s.crowell.weights[eid]
    return w


def kauffman_weight(s: BijectionSetup, tree) -> tuple[int, IntPoly]:
    """``(k, t^(|T| - k))`` for ``tree`` rooted at the exterior dual vertex."""
    kt = classify(s.link.dual.digraph, tree, s.root_face)
    return kt.k, IntPoly.monomial(len(kt.edges) - kt.k)


@dataclass(frozen=True)
class WeightRow:
    tree: tuple[int, ...]
    k: int
    kauffman: IntPoly
    arborescence: tuple[int, ...]
    crowell: IntPoly
    ok: bool


@dataclass(frozen=True)
class WeightReport:
    rows: tuple[WeightRow, ...]
    m2: int
    injective: bool
    surjective: bool

    @property
    def violations(self) -> tuple[WeightRow, ...]:
        return tuple(r for r in self.rows if not r.ok)

    @property
    def ok(self) -> bool:
        return self.injective and self.surjective and not self.violations


def verify_weight_relation(s: BijectionSetup) -> WeightReport:
    m2 = s.colors.m2
    rows = []
    for tree in spanning_trees(s.link.dual.digraph):
        k, wk = kauffman_weight(s, tree)
        arb = big_f(s, tree)
        wc = crowell_weight(s, arb)
        deg = wk.degree + m2 - 1
        expected = IntPoly.monomial(deg, (-1) ** deg) if deg >= 0 else None
        rows.append(WeightRow(tree, k, wk, arb, wc, wc == expected))
    images = [r.arborescence for r in rows]
    targets = set(arborescences(s.crowell.digraph, s.v))
    return WeightReport(tuple(rows), m2, len(set(images)) == len(images), set(images) == targets)


@dataclass
class LemmaReport:
    """Number of instances checked and the failures found, per lemma."""

    checked: dict[str, int] = field(default_factory=lambda: dict.fromkeys(LEMMAS, 0))
    failures: dict[str, list] = field(default_factory=lambda: {k: [] for k in LEMMAS})

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def record(self, name: str, holds: bool, detail) -> None:
        self.checked[name] += 1
        if not holds:
            self.failures[name].append(detail)


LEMMAS = ("first_edge_color", "last_edge", "overlap", "paths")


def lemma_checks(s: BijectionSetup) -> LemmaReport:
    """Evaluate the four structural predicates behind the weight relation
    on every spanning tree of ``D``."""
    rep = LemmaReport()
    link, cg = s.link, s.crowell.digraph
    d = link.dual.digraph
    color = s.colors.edge_color
    blue_region = {eid: s.colors.region_of_edge[eid] for eid in cg.edge_ids if color[eid] == "blue"}
    face_boundary = {
        r.ref: {h.edge for h in r.boundary} for r in link.regions if r.kind == "face"
    }
    incoming = {u: sorted(e.id for e in cg.edges if e.fin == u) for u in range(cg.vertex_count)}

    for tree in spanning_trees(d):
        tour = phi(s, tree)
        arb = set(psi(s, tour))
        where = {eid: i for i, eid in enumerate(tour)}
        kt = classify(d, tree, s.root_face)
        tree_vertices = {s.vertex_of(e) for e in tree}

        first_in = {}
        for eid in tour:
            first_in.setdefault(cg.edge(eid).fin, eid)

        for e in tree:
            ve = s.vertex_of(e)
            if ve == s.v:
                continue
            fe = first_in[ve]
            rep.record("first_edge_color", (color[fe] == "blue") == (e in kt.away_edges), (tree, e))

        last_of_region = {}
        for eid in tour:
            if eid in blue_region:
                last_of_region[blue_region[eid]] = eid
        lasts = set(last_of_region.values())

        for f in blue_region:
            if cg.edge(f).fin in tree_vertices:
                continue
            rep.record("last_edge", (f in arb) == (f not in lasts), (tree, f))

        for f in lasts:
            rep.record("overlap", cg.edge(f).fin not in tree_vertices, (tree, f))

        for w in range(d.vertex_count):
            at_w = [e for e in tree if w in (d.edge(e).init, d.edge(e).fin)]
            for e1 in at_w:
                v1 = s.vertex_of(e1)
                if v1 == s.v:
                    continue
                f = first_in[v1]
                if f not in face_boundary[w]:
                    continue
                (g,) = [x for x in incoming[v1] if x != f]
                i, j = where[f], where[g]
                visited = {cg.edge(tour[p]).fin for p in range(i, j)}
                for e2 in at_w:
                    if e2 != e1:
                        rep.record("paths", s.vertex_of(e2) not in visited, (tree, w, e1, e2))
    return rep
