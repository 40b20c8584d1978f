"""The generalized Alexander polynomial ``P_D(t) = sum_k c_k(D, r) t^k``.

Three routes compute it:

* :func:`pd_direct` classifies every spanning tree;
* :func:`pd_determinant` expands ``det(Lbar + t Lbar^T)`` exactly;
* :func:`~eulerian_alexander.trees.ck_inclusion_exclusion_vector` sums
  ``c_0`` over contractions.

:func:`pd` is the entry point used everywhere else.  It returns the
determinant route and, when asked to verify, raises
:class:`InconsistencyError` unless all routes agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InconsistencyError
from .graphs import Digraph, as_eulerian
from .linalg import det_cofactor, det_poly
from .polynomials import IntPoly
from .trees import ck_inclusion_exclusion_vector, ck_vector, out_laplacian

__all__ = [
    "LaplacianMatrix",
    "laplacian",
    "pd_direct",
    "pd_determinant",
    "pd_inclusion_exclusion",
    "pd",
]

INCLUSION_EXCLUSION_MAX_VERTICES = 5


@dataclass(frozen=True)
class LaplacianMatrix:
    """Signed out-degree Laplacian: ``odeg(i)`` on the diagonal, ``-#(i->j)`` off it.

    Loops are left out of both, so every row sums to zero.
    """

    entries: tuple[tuple[int, ...], ...]
    removed_index: int

    @property
    def size(self) -> int:
        return len(self.entries)

    def reduced(self) -> list[list[int]]:
        r = self.removed_index
        return [[x for j, x in enumerate(row) if j != r] for i, row in enumerate(self.entries) if i != r]


def laplacian(d: Digraph, removed_index: int | None = None) -> LaplacianMatrix:
    n = d.vertex_count
    if removed_index is None:
        removed_index = n - 1
    return LaplacianMatrix(tuple(tuple(row) for row in out_laplacian(d)), removed_index)


def _pencil(lbar: list[list[int]]) -> list[list[IntPoly]]:
    m = len(lbar)
    return [[IntPoly((lbar[i][j], lbar[j][i])) for j in range(m)] for i in range(m)]


def pd_direct(d: Digraph, r: int = 0) -> IntPoly:
    d = as_eulerian(d)
    return IntPoly(ck_vector(d, r))


def pd_determinant(d: Digraph, removed_index: int | None = None, *, method: str = "bareiss") -> IntPoly:
    """``det(Lbar + t Lbar^T)``; a single vertex gives the empty determinant 1.

    ``method="cofactor"`` uses Laplace expansion instead of elimination.
    """
    d = as_eulerian(d)
    lbar = laplacian(d, removed_index).reduced()
    mat = _pencil(lbar)
    if method == "cofactor":
        res = det_cofactor(mat)
        return res if isinstance(res, IntPoly) else IntPoly((res,))
    return det_poly(mat)


def pd_inclusion_exclusion(d: Digraph, r: int = 0) -> IntPoly:
    return IntPoly(ck_inclusion_exclusion_vector(as_eulerian(d), r))


def pd(d: Digraph, *, verify: bool = False) -> IntPoly:
    """``P_D(t)`` via the determinant.

    With ``verify`` the tree-classification route (root 0) and, for at most
    five vertices, the inclusion-exclusion route must agree exactly.
    """
    d = as_eulerian(d)
    p = pd_determinant(d)
    if verify:
        direct = pd_direct(d, 0)
        if direct != p:
            raise InconsistencyError(f"determinant {p.coeffs} != tree count {direct.coeffs}")
        if d.vertex_count <= INCLUSION_EXCLUSION_MAX_VERTICES:
            ie = pd_inclusion_exclusion(d, 0)
            if ie != p:
                raise InconsistencyError(f"determinant {p.coeffs} != inclusion-exclusion {ie.coeffs}")
    return p
