"""Exact integer linear algebra (no floating point)."""

from __future__ import annotations


def rank(matrix: list[list[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    m, ncols = len(rows), len(rows[0])
    prev = 1
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, m) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        for i in range(r + 1, m):
            a = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for k in range(c, ncols):
                # exact by Sylvester's identity
                row_i[k] = (p * row_i[k] - a * row_r[k]) // prev
        prev = p
        r += 1
        if r == m:
            break
    return r
