"""Exhaustive small test corpora.

* :func:`eulerian_corpus` lists every connected balanced multidigraph on at
  most ``max_vertices`` vertices with at most ``max_edges`` edges (loops
  included), one per isomorphism class.
* :func:`bipartite_maps` lists every connected plane bipartite multigraph
  with a fixed colouring and at most ``max_edges`` edges, one per class of
  orientation- and colour-preserving map isomorphism.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .graphs import Digraph, EulerianDigraph, HalfEdge, PlanarBipartiteGraph, RotationSystem, faces

__all__ = [
    "eulerian_corpus",
    "digraph_from_matrix",
    "bipartite_maps",
    "with_each_exterior",
    "map_code",
]


def digraph_from_matrix(matrix) -> EulerianDigraph:
    """Edges listed row by row, ``matrix[i][j]`` copies of ``i -> j``."""
    n = len(matrix)
    pairs = [(i, j) for i in range(n) for j in range(n) for _ in range(matrix[i][j])]
    return EulerianDigraph(n, tuple((k, i, j) for k, (i, j) in enumerate(pairs)))


def _balanced_matrices(n: int, max_edges: int):
    """Loopless balanced multiplicity vectors, indexed like ``pairs``.

    Pairs are ordered by their smaller endpoint, so vertex ``v`` is
    complete once its block ends and its balance can be checked early.
    """
    pairs = sorted(((i, j) for i in range(n) for j in range(n) if i != j), key=lambda p: (min(p), max(p), p))
    checks: dict[int, list[int]] = {}
    last = {}
    for idx, (i, j) in enumerate(pairs):
        last[min(i, j)] = idx
    for v, idx in last.items():
        checks.setdefault(idx, []).append(v)
    mult = [0] * len(pairs)
    bal = [0] * n
    out = []

    def rec(k: int, budget: int):
        if k == len(pairs):
            if not any(bal):
                out.append(tuple(mult))
            return
        i, j = pairs[k]
        for m in range(budget + 1):
            mult[k] = m
            bal[i] += m
            bal[j] -= m
            if all(bal[v] == 0 for v in checks.get(k, ())):
                rec(k + 1, budget - m)
            bal[i] -= m
            bal[j] += m
        mult[k] = 0

    rec(0, max_edges)
    return pairs, out


def _connected(n: int, matrix) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in range(n):
            if w not in seen and (matrix[u][w] or matrix[w][u]):
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _key(matrix, perm) -> tuple[int, ...]:
    n = len(matrix)
    return tuple(matrix[perm[i]][perm[j]] for i in range(n) for j in range(n))


def _invariant_orders(matrix):
    """Permutations listing vertices by nondecreasing isomorphism invariant."""
    n = len(matrix)
    inv = [
        (sum(matrix[v]), matrix[v][v], tuple(sorted(matrix[v])), tuple(sorted(matrix[u][v] for u in range(n))))
        for v in range(n)
    ]
    groups = [sorted(v for v in range(n) if inv[v] == key) for key in sorted(set(inv))]
    for parts in product(*(permutations(gr) for gr in groups)):
        yield tuple(v for part in parts for v in part)


def _canonical(matrix) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Smallest relabelled key over invariant-respecting orders, and the
    orders attaining it.  For a matrix already in canonical form those
    orders are exactly its automorphisms."""
    best, hits = None, []
    for p in _invariant_orders(matrix):
        k = _key(matrix, p)
        if best is None or k < best:
            best, hits = k, [p]
        elif k == best:
            hits.append(p)
    return best, hits


@lru_cache(maxsize=None)
def eulerian_corpus(max_vertices: int = 5, max_edges: int = 10, loops: bool = True) -> tuple[EulerianDigraph, ...]:
    """One representative per isomorphism class, sorted by (|V|, |E|, key)."""
    found = []
    for n in range(1, max_vertices + 1):
        pairs, vecs = _balanced_matrices(n, max_edges)
        classes = {}
        for vec in vecs:
            m = [[0] * n for _ in range(n)]
            for (i, j), c in zip(pairs, vec):
                m[i][j] = c
            if not _connected(n, m):
                continue
            key, _ = _canonical(m)
            classes.setdefault(key, None)
        for key in classes:
            base = [list(key[i * n : (i + 1) * n]) for i in range(n)]
            _, autos = _canonical(base)
            used = sum(key)
            loop_range = range(max_edges - used + 1) if loops else range(1)
            seen = set()
            for lv in product(loop_range, repeat=n):
                if sum(lv) + used > max_edges:
                    continue
                orbit_rep = min(tuple(lv[p[i]] for i in range(n)) for p in autos)
                if orbit_rep in seen:
                    continue
                seen.add(orbit_rep)
                m = [row[:] for row in base]
                for v in range(n):
                    m[v][v] = orbit_rep[v]
                found.append((n, used + sum(orbit_rep), key, orbit_rep, m))
    found.sort(key=lambda x: x[:4])
    return tuple(digraph_from_matrix(m) for *_, m in found)


# ---------------------------------------------------------------------------
# plane bipartite maps


def _as_graph(n, edges, colors, rots) -> PlanarBipartiteGraph:
    d = Digraph(n, tuple((k, u, v) for k, (u, v) in enumerate(edges)))
    rs = RotationSystem(tuple(tuple(HalfEdge(*h) for h in r) for r in rots))
    return PlanarBipartiteGraph(d, tuple(colors), rs)


def map_code(g: PlanarBipartiteGraph) -> tuple:
    """Canonical code of a coloured map on the sphere (exterior ignored)."""
    rot = g.rotation.rotations
    pos = g.rotation.position()
    vert = {h: v for h, (v, _) in pos.items()}

    def sigma(h):
        v, i = pos[h]
        return rot[v][(i + 1) % len(rot[v])]

    best = None
    for start in pos:
        label = {start: 0}
        order = [start]
        code = []
        i = 0
        while i < len(order):
            h = order[i]
            i += 1
            for nb in (sigma(h), h.twin):
                if nb not in label:
                    label[nb] = len(order)
                    order.append(nb)
            code.append((label[sigma(h)], label[h.twin], g.colors[vert[h]]))
        code = tuple(code)
        if best is None or code < best:
            best = code
    return best


def _extensions(n, edges, colors, rots):
    eid = len(edges)
    other = {"A": "B", "B": "A"}
    # pendant edge into each corner
    for u in range(n):
        slots = range(len(rots[u])) if rots[u] else range(1)
        for p in slots:
            r2 = [list(r) for r in rots]
            r2[u].insert(p, (eid, "+"))
            r2.append([(eid, "-")])
            yield n + 1, edges + [(u, n)], colors + [other[colors[u]]], r2
    # chord across a face between corners of opposite colours
    g = _as_graph(n, edges, colors, rots)
    pos = g.rotation.position()
    for cyc in faces(g.rotation, g.graph):
        corners = []
        for h in cyc:
            nxt_v, nxt_i = pos[h.twin]
            corners.append((nxt_v, nxt_i))  # insert before twin(h): inside this face
        for (u, iu), (w, iw) in product(corners, repeat=2):
            if colors[u] != "A" or colors[w] != "B":
                continue
            r2 = [list(r) for r in rots]
            r2[u].insert(iu, (eid, "+"))
            r2[w].insert(iw, (eid, "-"))
            yield n, edges + [(u, w)], colors, r2


@lru_cache(maxsize=None)
def bipartite_maps(max_edges: int = 6) -> tuple[PlanarBipartiteGraph, ...]:
    """Grown from a single A-B edge by pendant edges and face chords."""
    level = {}
    seed = _as_graph(2, [(0, 1)], ["A", "B"], [[(0, "+")], [(0, "-")]])
    level[map_code(seed)] = (2, [(0, 1)], ["A", "B"], [[(0, "+")], [(0, "-")]])
    out = [seed]
    for _ in range(max_edges - 1):
        nxt = {}
        for n, edges, colors, rots in level.values():
            for cand in _extensions(n, edges, colors, rots):
                g = _as_graph(*cand)
                code = map_code(g)
                if code not in nxt:
                    nxt[code] = cand
        level = nxt
        out.extend(_as_graph(*c) for c in sorted(level.values(), key=lambda c: (len(c[1]), c[0], str(c))))
    return tuple(out)


def with_each_exterior(g: PlanarBipartiteGraph) -> list[PlanarBipartiteGraph]:
    """Copies of ``g`` with each face in turn declared exterior."""
    return [PlanarBipartiteGraph(g.graph, g.colors, g.rotation, cyc[0]) for cyc in g.face_cycles]
