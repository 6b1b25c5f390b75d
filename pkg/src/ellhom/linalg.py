"""Exact linear algebra over the integers and rationals.

Everything here is fraction-free or Fraction-based; no floating point
anywhere, so ranks and determinants are exact by construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def sparse_int_rank(rows: list[dict[int, int]]) -> int:
    """Rank of an integer matrix given as sparse rows {column: entry}.

    Fraction-free elimination: each update is pivot*row - entry*pivot_row,
    followed by a row-gcd reduction to keep entries small. Row operations
    of this kind scale rows by nonzero integers, so the rank is preserved.
    Pivot rows are chosen shortest-first (sparsity), the pivot column by
    smallest entry within that row.
    """
    work = [dict(r) for r in rows if r]
    rank = 0
    while work:
        k = min(range(len(work)), key=lambda i: len(work[i]))
        pivot_row = work.pop(k)
        col = min(pivot_row, key=lambda c: (abs(pivot_row[c]), c))
        pv = pivot_row[col]
        rank += 1
        reduced = []
        for row in work:
            rv = row.get(col)
            if rv is None:
                reduced.append(row)
                continue
            new = {c: pv * v for c, v in row.items() if c != col}
            for c, pw in pivot_row.items():
                if c == col:
                    continue
                nv = new.get(c, 0) - rv * pw
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
                reduced.append(new)
        work = reduced
    return rank


def int_det(matrix) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def fraction_inverse(matrix) -> list[list[Fraction]]:
    """Inverse of a square matrix with integer or Fraction entries."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [v / pv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def int_matrix_inverse(matrix) -> tuple[tuple[int, ...], ...]:
    """Inverse of an integer matrix that is invertible over the integers."""
    inv = fraction_inverse(matrix)
    out = []
    for row in inv:
        for v in row:
            if v.denominator != 1:
                raise ValueError("matrix is not invertible over the integers")
        out.append(tuple(int(v) for v in row))
    return tuple(out)
