"""Root polytopes of the dual oriented matroid of an Eulerian digraph.

The oriented dual ``M*`` of the graphic matroid of ``D`` is represented by
the signed fundamental-cycle matrix of a spanning tree: its row space is
the cycle space of ``D``.  Every volume the expansion below needs is a
normalized lattice volume (a unimodular simplex has volume 1), and each one
equals a tree count of a contraction of ``D``.

Because ``D`` is Eulerian, the all-ones edge vector is a circulation, so
every column of the matrix sums to 1.  All columns therefore lie on a
hyperplane at lattice height 1, and the normalized volume of the root
polytope equals ``m!`` times the Euclidean volume of the pyramid over it
with apex 0.  :func:`root_polytope_volume` uses that fact as a geometric
cross-check that does not count trees at all.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import ConvexHull

from .errors import InconsistencyError, InputError
from .graphs import Digraph, as_eulerian, contract, contraction_map
from .linalg import det_int, kernel_basis, rank
from .polynomials import ONE, ZERO, IntPoly
from .trees import arborescences, c0_matrix_tree, forests, spanning_trees

__all__ = [
    "TUMatrix",
    "dual_tu_matrix",
    "verify_totally_unimodular",
    "signed_circuits",
    "is_co_eulerian",
    "normalized_volume",
    "root_polytope_volume",
    "polytope_expansion",
    "polytope_expansion_from_matrix",
    "arborescence_simplices_unimodular",
]

T_MINUS_ONE = IntPoly((-1, 1))


@dataclass(frozen=True)
class TUMatrix:
    """Integer matrix with entries in {-1, 0, 1}; ``columns`` are edge ids."""

    rows: tuple[tuple[int, ...], ...]
    columns: tuple[int, ...]

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise InputError("row length does not match column labels")
            if any(x not in (-1, 0, 1) for x in row):
                raise InputError("entries must lie in {-1, 0, 1}")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def column(self, eid: int) -> tuple[int, ...]:
        j = self.columns.index(eid)
        return tuple(row[j] for row in self.rows)

    def restrict(self, keep: Iterable[int]) -> "TUMatrix":
        """Submatrix on the columns labelled by ``keep`` (in matrix order)."""
        keep = set(keep)
        idx = [j for j, c in enumerate(self.columns) if c in keep]
        return TUMatrix(tuple(tuple(row[j] for j in idx) for row in self.rows), tuple(self.columns[j] for j in idx))

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.shape)


def _tree_path(d: Digraph, tree: Sequence[int], src: int, dst: int) -> list[tuple[int, int]]:
    """Tree path from ``src`` to ``dst`` as ``(edge_id, +1/-1)`` steps,
    +1 when the step follows the edge's orientation."""
    adj = defaultdict(list)
    for eid in tree:
        e = d.edge(eid)
        adj[e.init].append((e.fin, eid, 1))
        adj[e.fin].append((e.init, eid, -1))
    back = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for w, eid, s in adj[u]:
            if w not in back:
                back[w] = (u, eid, s)
                queue.append(w)
    steps = []
    v = dst
    while back[v] is not None:
        u, eid, s = back[v]
        steps.append((eid, s))
        v = u
    return steps[::-1]


def dual_tu_matrix(d: Digraph, tree: Iterable[int]) -> TUMatrix:
    """Signed fundamental cycles of ``tree``, one row per non-tree edge.

    The cycle of ``f`` runs along ``f`` and back through the tree; ``f``
    itself gets +1 and each tree edge +1 or -1 as it agrees or disagrees
    with that direction of travel.
    """
    tree = tuple(sorted(tree))
    if tree not in set(spanning_trees(d)):
        raise InputError(f"{list(tree)} is not a spanning tree")
    cols = tuple(sorted(d.edge_ids))
    index = {c: j for j, c in enumerate(cols)}
    rows = []
    in_tree = set(tree)
    for f in cols:
        if f in in_tree:
            continue
        e = d.edge(f)
        row = [0] * len(cols)
        row[index[f]] = 1
        for eid, s in _tree_path(d, tree, e.fin, e.init):
            row[index[eid]] = s
        rows.append(tuple(row))
    return TUMatrix(tuple(rows), cols)


def verify_totally_unimodular(m: TUMatrix, bound: int | None = None) -> bool:
    """Exhaustively check every square minor of order ``<= bound``."""
    nrows, ncols = m.shape
    top = min(nrows, ncols)
    if bound is None:
        bound = top
    if bound > top:
        raise InputError(f"bound {bound} exceeds min(rows, cols) = {top}")
    for k in range(1, bound + 1):
        for ri in combinations(range(nrows), k):
            for ci in combinations(range(ncols), k):
                sub = [[m.rows[i][j] for j in ci] for i in ri]
                if det_int(sub) not in (-1, 0, 1):
                    return False
    return True


def signed_circuits(m: TUMatrix) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Signed circuits (minimal column dependencies) as ``(C+, C-)`` label sets.

    Each circuit is normalised so the smallest label lies in ``C+``.
    """
    nrows, ncols = m.shape
    out = []
    for size in range(1, nrows + 2):
        for cols in combinations(range(ncols), size):
            sub = [[m.rows[i][j] for j in cols] for i in range(nrows)]
            ker = kernel_basis(sub, size) if nrows else kernel_basis([], size)
            if len(ker) != 1 or any(x == 0 for x in ker[0]):
                continue
            v = ker[0]
            if v[0] < 0:
                v = [-x for x in v]
            pos = frozenset(m.columns[cols[i]] for i in range(size) if v[i] > 0)
            neg = frozenset(m.columns[cols[i]] for i in range(size) if v[i] < 0)
            out.append((pos, neg))
    return out


def is_co_eulerian(m: TUMatrix) -> bool:
    """Whether every signed circuit has ``|C+| == |C-|``."""
    return all(len(p) == len(n) for p, n in signed_circuits(m))


def arborescence_simplices_unimodular(d: Digraph, r: int, m: TUMatrix) -> bool:
    """Each complement of an arborescence from ``r`` indexes a unimodular simplex."""
    all_ids = set(m.columns)
    for arb in arborescences(d, r):
        basis = sorted(all_ids - set(arb))
        sub = m.restrict(basis)
        if abs(det_int([list(row) for row in sub.rows])) != 1:
            return False
    return True


def normalized_volume(d: Digraph, r: int) -> int:
    """Normalized volume of the root polytope of ``M*``, i.e. ``c_0(D, r)``.

    ``c_0`` comes from the matrix-tree determinant; the number of simplices
    in the arborescence triangulation is counted independently by tree
    enumeration, and the two must agree.
    """
    d = as_eulerian(d)
    c0 = c0_matrix_tree(d, r)
    simplices = len(arborescences(d, r))
    if c0 != simplices:
        raise InconsistencyError(f"c0 = {c0} but the triangulation has {simplices} simplices")
    return c0


def root_polytope_volume(m: TUMatrix) -> int:
    """Normalized volume of ``conv(columns)`` computed geometrically.

    Requires the columns to lie on the hyperplane ``sum(x) = 1`` (true for
    the dual matrix of an Eulerian digraph and for any column deletion).
    """
    nrows, ncols = m.shape
    if nrows == 0:
        return 1
    arr = m.as_array()
    if not np.all(arr.sum(axis=0) == 1):
        raise InputError("columns do not lie on the hyperplane sum(x) = 1")
    if rank([list(r) for r in m.rows]) < nrows:
        return 0
    if nrows == 1:
        return 1
    pts = np.vstack([np.zeros((1, nrows)), arr.T.astype(float)])
    vol = ConvexHull(pts).volume * factorial(nrows)
    out = int(round(vol))
    if abs(vol - out) > 1e-6:
        raise InconsistencyError(f"non-integral normalized volume {vol}")
    return out


def polytope_expansion(d: Digraph, r: int) -> IntPoly:
    """``sum_{E'} Vol(D/E') (t-1)^(|V|-1-|E'|)`` over cycle-free ``E'``.

    Deleting the columns ``E'`` from a representation of ``M*`` keeps the
    rank exactly when ``E'`` is independent in ``M``, and represents the
    dual of ``D/E'``; hence each term is a contraction volume.
    """
    d = as_eulerian(d)
    n = d.vertex_count
    by_size: dict[int, int] = defaultdict(int)
    for f in forests(d):
        minor = contract(d, f)
        root = contraction_map(d, f)[r]
        by_size[len(f)] += normalized_volume(minor, root)
    total = ZERO
    for size, vol in by_size.items():
        total = total + (T_MINUS_ONE ** (n - 1 - size)).scale(vol)
    return total


def polytope_expansion_from_matrix(m: TUMatrix) -> IntPoly:
    """The same expansion evaluated on the matrix alone.

    Sums the geometric volume of ``conv(H)`` times ``(t-1)^(#col(H)-m)`` over
    every column subset ``H`` of full rank.  Exponential; small inputs only.
    """
    nrows, ncols = m.shape
    total = ZERO
    labels = m.columns
    for size in range(nrows, ncols + 1):
        for keep in combinations(labels, size):
            h = m.restrict(keep)
            if nrows and rank([list(r) for r in h.rows]) < nrows:
                continue
            total = total + (T_MINUS_ONE ** (size - nrows)).scale(root_polytope_volume(h))
    return total
