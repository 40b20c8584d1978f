"""Exact determinants over Z and Z[t].

Both eliminations are Bareiss' fraction-free scheme: every division is
exact, so no rationals ever appear.  ``det_cofactor`` is a plain Laplace
expansion kept as an independent check for small matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polynomials import ONE, ZERO, IntPoly

__all__ = ["det_int", "det_poly", "det_cofactor", "reduced", "rank", "row_echelon", "kernel_basis"]


def reduced(matrix: Sequence[Sequence], index: int) -> list[list]:
    """Drop row and column ``index``."""
    return [[x for j, x in enumerate(row) if j != index] for i, row in enumerate(matrix) if i != index]


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def det_poly(matrix: Sequence[Sequence[IntPoly]]) -> IntPoly:
    """Determinant of a matrix of :class:`IntPoly` entries."""
    a = [[x if isinstance(x, IntPoly) else IntPoly((x,)) for x in row] for row in matrix]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, n):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = row_i[j] * akk - aik * row_k[j]
                row_i[j] = num if prev == ONE else num.exact_div(prev)
            row_i[k] = ZERO
        prev = akk
    result = a[n - 1][n - 1]
    return result if sign == 1 else -result


def det_cofactor(matrix: Sequence[Sequence]):
    """Laplace expansion along the first row; works for ints or IntPoly."""
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for j, x in enumerate(matrix[0]):
        if x == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        term = x * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _fraction_rows(matrix):
    return [[Fraction(x) for x in row] for row in matrix]


def row_echelon(matrix: Sequence[Sequence[int]]):
    """Reduced row echelon form over Q; returns ``(rows, pivot_columns)``."""
    a = _fraction_rows(matrix)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(matrix: Sequence[Sequence[int]]) -> int:
    if not matrix or not matrix[0]:
        return 0
    return len(row_echelon(matrix)[1])


def kernel_basis(matrix: Sequence[Sequence[int]], ncols: int | None = None):
    """Basis of the right null space over Q, as lists of Fractions."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    a, pivots = row_echelon(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][f]
        basis.append(v)
    return basis
