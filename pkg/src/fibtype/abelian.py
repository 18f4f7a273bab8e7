"""Abelianisation of G_n(m, k) through the Smith normal form of its relation matrix."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple[int, ...]   # d_1 | d_2 | ..., each > 1
    rank: int

    @property
    def order(self) -> int | None:
        """|G^ab|, or None when the free rank is positive."""
        return None if self.rank else prod(self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z_{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "1"


def relation_matrix(n: int, m: int, k: int) -> IntMatrix:
    """Exponent-sum matrix: row i has +1 at columns i, i+m and -1 at i+k (summed on collisions)."""
    if not (0 <= m < n and 0 <= k < n):
        raise ValueError(f"parameters out of range: need 0 <= m,k < n, got m={m}, k={k}, n={n}")
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] += 1
        M[i][(i + m) % n] += 1
        M[i][(i + k) % n] -= 1
    return M


def _diagonalize(A: IntMatrix) -> list[int]:
    """Diagonal entries after unimodular elimination (not yet a divisibility chain)."""
    A = [row[:] for row in A]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: the nonzero entry of least absolute value in the remaining block
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                a = A[i][j]
                if a and (piv is None or abs(a) < piv[0]):
                    piv = (abs(a), i, j)
                    if piv[0] == 1:
                        break
            if piv is not None and piv[0] == 1:
                break
        if piv is None:
            break
        _, i, j = piv
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // p
                    ri, rt = A[i], A[t]
                    for j in range(t, cols):
                        ri[j] -= q * rt[j]
                    if ri[t]:
                        done = False
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // p
                    for i in range(t, rows):
                        A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        done = False
            if done:
                break
            # a remainder survived: move the smallest entry of row/column t to the pivot
            best = (abs(p), t, t)
            for i in range(t + 1, rows):
                if A[i][t] and abs(A[i][t]) < best[0]:
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, cols):
                if A[t][j] and abs(A[t][j]) < best[0]:
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            if i != t:
                A[t], A[i] = A[i], A[t]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag + [0] * (min(rows, cols) - len(diag))


def _divisibility_chain(diag: list[int]) -> list[int]:
    """Rewrite diag(d_1..d_r) as an equivalent chain d_1 | d_2 | ... (zeros last)."""

    d = sorted(x for x in diag if x)
    zeros = len(diag) - len(d)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                if b % a:
                    g = gcd(a, b)
                    d[i], d[j] = g, a * b // g
                    changed = True
        d.sort()
    return d + [0] * zeros


def smith_normal_form(M: IntMatrix) -> AbelianInvariants:
    """Invariants of the abelian group Z^cols / rowspace(M)."""
    cols = len(M[0]) if M else 0
    chain = _divisibility_chain(_diagonalize(M))
    nonzero = [d for d in chain if d]
    rank = cols - len(nonzero)
    return AbelianInvariants(tuple(d for d in nonzero if d > 1), rank)


def abelian_invariants(n: int, m: int, k: int) -> AbelianInvariants:
    return smith_normal_form(relation_matrix(n, m, k))


def determinant(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [row[:] for row in M]
    size = len(A)
    sign, prev = 1, 1
    for t in range(size - 1):
        if A[t][t] == 0:
            for i in range(t + 1, size):
                if A[i][t]:
                    A[t], A[i] = A[i], A[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, size):
            for j in range(t + 1, size):
                A[i][j] = (A[i][j] * A[t][t] - A[i][t] * A[t][j]) // prev
        prev = A[t][t]
    return sign * A[-1][-1] if size else 1
