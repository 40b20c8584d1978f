"""Spanning trees, k-spanning trees, arborescences and Eulerian tours.

A spanning tree of a digraph is a spanning tree of its underlying
undirected multigraph (loops never qualify).  Rooted at ``r``, a tree is a
*k-spanning tree* when exactly ``k`` of its edges point away from ``r``
along the tree; 0-spanning trees are the oriented spanning trees (all
edges toward ``r``) and ``(n-1)``-spanning trees are the arborescences.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import InputError
from .graphs import Digraph, Edge, EulerianDigraph, as_eulerian, contract, contraction_map
from .linalg import det_int

__all__ = [
    "KTree",
    "spanning_trees",
    "classify",
    "ck_vector",
    "arborescences",
    "oriented_spanning_trees",
    "count_eulerian_tours",
    "eulerian_tours",
    "best_count",
    "c0_matrix_tree",
    "forests",
    "ck_inclusion_exclusion",
    "ck_inclusion_exclusion_vector",
    "out_laplacian",
]


@dataclass(frozen=True)
class KTree:
    edges: tuple[int, ...]
    root: int
    away_edges: frozenset[int]

    @property
    def k(self) -> int:
        return len(self.away_edges)

    @property
    def toward_edges(self) -> frozenset[int]:
        return frozenset(self.edges) - self.away_edges


def _usable_edges(d: Digraph) -> list[Edge]:
    return sorted((e for e in d.edges if not e.is_loop), key=lambda e: e.id)


def spanning_trees(d: Digraph) -> list[tuple[int, ...]]:
    """All spanning trees as sorted edge-id tuples, in lexicographic order.

    Include/exclude backtracking over edges in id order; an edge is only
    excluded while the remaining edges can still connect the forest.
    """
    if not d.is_connected():
        raise InputError("spanning trees need a connected graph")
    n = d.vertex_count
    if n == 0:
        return []
    edges = _usable_edges(d)
    need = n - 1
    out: list[tuple[int, ...]] = []

    def connectable(comp: tuple[int, ...], start: int) -> bool:
        # comp[v] is the smallest vertex of v's component, so it is already
        # a valid union-find parent array
        label = list(comp)

        def find(x):
            while label[x] != x:
                label[x] = label[label[x]]
                x = label[x]
            return x

        groups = len(set(comp))
        if groups == 1:
            return True
        for e in edges[start:]:
            a, b = find(e.init), find(e.fin)
            if a != b:
                label[max(a, b)] = min(a, b)
                groups -= 1
                if groups == 1:
                    return True
        return groups == 1

    def rec(i: int, comp: tuple[int, ...], chosen: list[int]):
        if len(chosen) == need:
            out.append(tuple(chosen))
            return
        if len(edges) - i < need - len(chosen):
            return
        e = edges[i]
        a, b = comp[e.init], comp[e.fin]
        if a != b:
            lo, hi = min(a, b), max(a, b)
            merged = tuple(lo if c == hi else c for c in comp)
            chosen.append(e.id)
            rec(i + 1, merged, chosen)
            chosen.pop()
        if connectable(comp, i + 1):
            rec(i + 1, comp, chosen)

    rec(0, tuple(range(n)), [])
    out.sort()
    return out


def _tree_adjacency(d: Digraph, tree: Sequence[int]) -> dict[int, list[tuple[int, Edge]]]:
    adj: dict[int, list[tuple[int, Edge]]] = defaultdict(list)
    for eid in tree:
        e = d.edge(eid)
        adj[e.init].append((e.fin, e))
        adj[e.fin].append((e.init, e))
    return adj


def _check_tree(d: Digraph, tree: Sequence[int]) -> None:
    n = d.vertex_count
    ids = list(tree)
    if len(set(ids)) != len(ids) or len(ids) != n - 1:
        raise InputError(f"{ids} is not a spanning tree: wrong edge count")
    labels = contraction_map(d, ids)
    if len(set(labels)) != 1 and n > 0:
        raise InputError(f"{ids} is not a spanning tree: not connected")


def classify(d: Digraph, tree: Iterable[int], r: int) -> KTree:
    """Root ``tree`` at ``r`` and collect the edges pointing away from ``r``."""
    tree = tuple(sorted(tree))
    _check_tree(d, tree)
    if not 0 <= r < d.vertex_count:
        raise InputError(f"root {r} is not a vertex")
    adj = _tree_adjacency(d, tree)
    away = set()
    seen = {r}
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w, e in adj[u]:
            if w in seen:
                continue
            seen.add(w)
            if e.init == u:
                away.add(e.id)
            queue.append(w)
    return KTree(tree, r, frozenset(away))


def ck_vector(d: Digraph, r: int) -> list[int]:
    """``[c_0, ..., c_{n-1}]``: number of k-spanning trees rooted at ``r``."""
    n = d.vertex_count
    counts = [0] * max(n, 1)
    for t in spanning_trees(d):
        counts[classify(d, t, r).k] += 1
    return counts


def arborescences(d: Digraph, r: int) -> list[tuple[int, ...]]:
    """Spanning trees with a directed path from ``r`` to every vertex."""
    n = d.vertex_count
    return [t for t in spanning_trees(d) if classify(d, t, r).k == n - 1]


def oriented_spanning_trees(d: Digraph, r: int) -> list[tuple[int, ...]]:
    """Spanning trees with a directed path from every vertex to ``r``."""
    return [t for t in spanning_trees(d) if classify(d, t, r).k == 0]


# ---------------------------------------------------------------------------
# matrix-tree


def out_laplacian(d: Digraph) -> list[list[int]]:
    """``L = D_out - A`` with loops ignored; rows sum to zero."""
    n = d.vertex_count
    lap = [[0] * n for _ in range(n)]
    for e in d.edges:
        if e.is_loop:
            continue
        lap[e.init][e.init] += 1
        lap[e.init][e.fin] -= 1
    return lap


def c0_matrix_tree(d: Digraph, r: int) -> int:
    """Number of oriented spanning trees toward ``r`` (directed matrix-tree)."""
    lap = out_laplacian(d)
    minor = [[x for j, x in enumerate(row) if j != r] for i, row in enumerate(lap) if i != r]
    return det_int(minor)


# ---------------------------------------------------------------------------
# Eulerian tours


def _out_lists(d: Digraph) -> dict[int, list[Edge]]:
    out: dict[int, list[Edge]] = defaultdict(list)
    for e in sorted(d.edges, key=lambda e: e.id):
        out[e.init].append(e)
    return out


def eulerian_tours(d: Digraph, first: int) -> Iterator[tuple[int, ...]]:
    """Every Eulerian tour (as an edge-id sequence) beginning with edge ``first``."""
    e0 = d.edge(first)
    out = _out_lists(d)
    used: set[int] = {e0.id}
    path = [e0.id]
    total = len(d.edges)
    start = e0.init

    def rec(v: int):
        if len(path) == total:
            if v == start:
                yield tuple(path)
            return
        for e in out[v]:
            if e.id in used:
                continue
            used.add(e.id)
            path.append(e.id)
            yield from rec(e.fin)
            path.pop()
            used.discard(e.id)

    yield from rec(e0.fin)


def count_eulerian_tours(d: Digraph, e: int, r: int | None = None) -> int:
    """Number of Eulerian tours beginning with edge ``e``, by backtracking.

    If ``r`` is given it must be ``init(e)``.
    """
    d = as_eulerian(d)
    edge = d.edge(e)
    if r is not None and edge.init != r:
        raise InputError(f"edge {e} does not start at vertex {r}")
    return sum(1 for _ in eulerian_tours(d, e))


def best_count(d: EulerianDigraph, r: int) -> int:
    """``c_0(D, r) * prod_u (odeg(u) - 1)!``."""
    d = as_eulerian(d)
    return c0_matrix_tree(d, r) * prod(factorial(d.odeg(u) - 1) for u in range(d.vertex_count) if d.odeg(u) > 0)


# ---------------------------------------------------------------------------
# inclusion-exclusion


def forests(d: Digraph, max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """All cycle-free edge subsets (loops excluded), by union-find backtracking."""
    edges = _usable_edges(d)
    n = d.vertex_count
    limit = n - 1 if max_size is None else min(max_size, n - 1)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[int] = []

    def rec(i: int):
        yield tuple(chosen)
        if len(chosen) == limit:
            return
        for j in range(i, len(edges)):
            e = edges[j]
            a, b = find(e.init), find(e.fin)
            if a == b:
                continue
            parent[b] = a
            chosen.append(e.id)
            yield from rec(j + 1)
            chosen.pop()
            parent[b] = b

    yield from rec(0)


def _c0_by_size(d: Digraph, r: int, max_size: int) -> dict[int, list[int]]:
    by_size: dict[int, list[int]] = defaultdict(list)
    for f in forests(d, max_size):
        minor = contract(d, f)
        root = contraction_map(d, f)[r]
        by_size[len(f)].append(c0_matrix_tree(minor, root))
    return by_size


def _ie_coefficient(n: int, k: int, by_size: dict[int, list[int]]) -> int:
    total = 0
    for i in range(k + 1):
        j = k - i
        s = sum(by_size.get(j, ()))
        total += (-1) ** i * comb(n - 1 - j, i) * s
    return total


def ck_inclusion_exclusion(d: Digraph, r: int, k: int) -> int:
    """``c_k`` from ``c_0`` of contractions by cycle-free edge sets."""
    d = as_eulerian(d)
    n = d.vertex_count
    if not 0 <= k <= n - 1:
        raise InputError(f"k must lie in 0..{n - 1}")
    return _ie_coefficient(n, k, _c0_by_size(d, r, k))


def ck_inclusion_exclusion_vector(d: Digraph, r: int) -> list[int]:
    d = as_eulerian(d)
    n = d.vertex_count
    by_size = _c0_by_size(d, r, n - 1)
    return [_ie_coefficient(n, k, by_size) for k in range(n)]
