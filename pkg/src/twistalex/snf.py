"""Smith normal form of integer matrices with unimodular transforms."""
from __future__ import annotations


def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M):
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular, ``D`` is diagonal with nonnegative entries
    and ``D[i][i]`` divides ``D[i+1][i+1]``.  ``M`` is a list of integer rows;
    an ``r x 0`` or ``0 x c`` input is allowed.
    """
    A = [list(map(int, row)) for row in M]
    r = len(A)
    c = len(A[0]) if r else 0
    U, V = _eye(r), _eye(c)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        # row dst += f * row src
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, f):
        for row in A:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    for k in range(min(r, c)):
        # choose the smallest nonzero entry of the remaining block as pivot
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(k, r) for j in range(k, c) if A[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(k, pi)
            swap_cols(k, pj)
            p = A[k][k]
            clean = True
            for i in range(k + 1, r):
                q = A[i][k] // p
                if q:
                    add_row(k, i, -q)
                if A[i][k]:
                    clean = False
            for j in range(k + 1, c):
                q = A[k][j] // p
                if q:
                    add_col(k, j, -q)
                if A[k][j]:
                    clean = False
            if not clean:
                continue
            # enforce divisibility against the rest of the block
            bad = next(((i, j) for i in range(k + 1, r) for j in range(k + 1, c)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], k, 1)
        if A[k][k] < 0:
            A[k] = [-a for a in A[k]]
            U[k] = [-a for a in U[k]]
    return U, A, V


def int_matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def int_det(M) -> int:
    """Integer determinant by Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def diagonal(D):
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]
