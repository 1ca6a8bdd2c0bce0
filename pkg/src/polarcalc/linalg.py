"""Tiny exact linear algebra over the coefficient fields.

Everything works on lists of lists of field scalars (Fraction or Mod) and
is only ever used on matrices of size at most 7, so plain Gaussian
elimination with exact division is all we need.
"""

from __future__ import annotations

from .polyring import DomainError


def identity(field, n: int):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_mul(field, a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [
        [sum((a[i][t] * b[t][j] for t in range(1, k)), a[i][0] * b[0][j]) for j in range(m)]
        for i in range(n)
    ]


def mat_inverse(field, m):
    n = len(m)
    work = [[field.coerce(x) for x in row] + identity(field, n)[i] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            raise DomainError("singular matrix")
        work[col], work[pivot] = work[pivot], work[col]
        inv = field.one / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return [row[n:] for row in work]


def rank(field, m):
    if not m:
        return 0
    work = [[field.coerce(x) for x in row] for row in m]
    rows, cols = len(work), len(work[0])
    rk, col = 0, 0
    while rk < rows and col < cols:
        pivot = next((r for r in range(rk, rows) if work[r][col]), None)
        if pivot is None:
            col += 1
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        inv = field.one / work[rk][col]
        work[rk] = [x * inv for x in work[rk]]
        for r in range(rows):
            if r != rk and work[r][col]:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[rk])]
        rk += 1
        col += 1
    return rk


def scalar_determinant(field, m):
    n = len(m)
    work = [[field.coerce(x) for x in row] for row in m]
    det = field.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col]), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det = det * work[col][col]
        inv = field.one / work[col][col]
        for r in range(col + 1, n):
            if work[r][col]:
                f = work[r][col] * inv
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return det
