"""Parameter arithmetic for G_n(m, k).

The classification is phrased in the residues ``A = k`` and ``B = k - m``
(mod n).  Two isomorphisms act on parameters:

* swap:    G_n(m, k) ~ G_n(n - m, n - m + k), exchanging A and B;
* rescale: multiplying all subscripts by a unit c of Z_n, sending (A, B) to (cA, cB).

:func:`canonicalize` picks the lexicographically least (A, B) in the orbit of
these two moves.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import NamedTuple


class ParameterError(ValueError):
    """Invalid (n, m, k) for the requested operation."""


FREE_PRODUCT_MESSAGE = "gcd(n,m,k) > 1: the group decomposes as a free product; reduce parameters"


@dataclass(frozen=True)
class FibParams:
    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError(f"need n >= 2, got n={self.n}")
        if not (0 <= self.m < self.n and 0 <= self.k < self.n):
            raise ParameterError(
                f"parameters out of range: need 0 <= m,k < n, got m={self.m}, k={self.k}, n={self.n}"
            )

    @property
    def A(self) -> int:
        return self.k % self.n

    @property
    def B(self) -> int:
        return (self.k - self.m) % self.n

    @property
    def gcd_nmk(self) -> int:
        return gcd(gcd(self.n, self.m), self.k)

    @property
    def a_zero(self) -> bool:
        return self.A == 0

    @property
    def b_zero(self) -> bool:
        return self.B == 0

    @property
    def trivial(self) -> bool:
        """k = 0 or m = k: the group is trivial."""
        return self.a_zero or self.b_zero

    @property
    def decomposes(self) -> bool:
        return self.gcd_nmk > 1

    def name(self) -> str:
        return f"G_{self.n}({self.m},{self.k})"


class OrbitKey(NamedTuple):
    A: int
    B: int


def derive(n: int, m: int, k: int) -> FibParams:
    return FibParams(n, m, k)


def from_residues(n: int, A: int, B: int) -> FibParams:
    """Parameters with prescribed residues: k = A, m = A - B."""
    return FibParams(n, (A - B) % n, A % n)


def swap_iso(p: FibParams) -> FibParams:
    n = p.n
    return FibParams(n, (n - p.m) % n, (n - p.m + p.k) % n)


def units(n: int) -> list[int]:
    return [c for c in range(1, n) if gcd(c, n) == 1] if n > 1 else [0]


def rescale_iso(p: FibParams, c: int) -> FibParams:
    n = p.n
    if gcd(c, n) != 1:
        raise ParameterError(f"{c} is not a unit mod {n}")
    return FibParams(n, (c * p.m) % n, (c * p.k) % n)


@lru_cache(maxsize=None)
def _orbit_key(n: int, A: int, B: int) -> OrbitKey:
    best = None
    for c in units(n):
        a, b = (c * A) % n, (c * B) % n
        cand = min((a, b), (b, a))
        if best is None or cand < best:
            best = cand
    return OrbitKey(*best)


def canonicalize(p: FibParams) -> OrbitKey:
    if p.decomposes:
        raise ParameterError(FREE_PRODUCT_MESSAGE)
    return _orbit_key(p.n, p.A, p.B)


def proper_divisors(p: int) -> list[int]:
    return [d for d in range(1, p) if p % d == 0]


def has_additive_order(x: int, n: int, p: int) -> bool:
    """True iff x has additive order exactly p in Z_n (x = s*n/p with gcd(s, p) = 1)."""
    if (p * x) % n:
        return False
    return all((d * x) % n for d in proper_divisors(p))


def is_half(x: int, n: int) -> bool:
    """x = n/2 mod n (never true for odd n)."""
    return n % 2 == 0 and x % n == n // 2


# (t values, N values) per family; n = p*N and the family is G_{pN}(mult, t*N)
_CASE_FAMILIES = {
    5: [(1, (1, 2, 3, 4), (3, 4, 5, 6, 7)), (5, (1, 2, 3, 4), (3, 4, 6, 7))],
    4: [(1, (1, 3), (4, 5, 6, 7)), (2, (1, 3), (5, 7)), (4, (1, 3), (5, 7))],
    3: [(1, (1, 2), (5, 6, 7)), (3, (1, 2), (5, 7))],
}


def case_representatives(p: int) -> list[FibParams]:
    """Representatives of G_n(m, k) with k of additive order p and 13 <= n <= 7p.

    Families G_{pN}(c, tN) for c dividing the relevant gcd, in the order
    they are usually listed.
    """
    if p not in _CASE_FAMILIES:
        raise ParameterError(f"p must be 3, 4 or 5, got {p}")
    reps = []
    for mult, ts, Ns in _CASE_FAMILIES[p]:
        for N in Ns:
            for t in ts:
                n = p * N
                reps.append(FibParams(n, mult % n, (t * N) % n))
    return reps
