from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from fibtype.abelian import AbelianInvariants, abelian_invariants, determinant, relation_matrix, smith_normal_form
from fibtype.params import FibParams, rescale_iso, swap_iso, units


def sympy_invariants(M) -> AbelianInvariants:
    f = [abs(int(x)) for x in invariant_factors(Matrix(M), domain=ZZ)]
    f += [0] * (len(M[0]) - len(f))
    return AbelianInvariants(tuple(x for x in f if x > 1), f.count(0))


def test_relation_matrix_examples():
    assert relation_matrix(3, 1, 2) == [[1, 1, -1], [-1, 1, 1], [1, -1, 1]]
    assert relation_matrix(5, 0, 2)[0] == [2, 0, -1, 0, 0]
    for n, m, k in [(7, 3, 5), (10, 7, 1), (4, 0, 0)]:
        assert all(sum(row) == 1 for row in relation_matrix(n, m, k))


def test_snf_examples():
    assert smith_normal_form([[1, 0], [0, 1]]) == AbelianInvariants((), 0)
    assert smith_normal_form([[2, 0], [0, 6]]) == AbelianInvariants((2, 6), 0)
    assert smith_normal_form([[6, 0], [0, 4]]) == AbelianInvariants((2, 12), 0)
    assert smith_normal_form([[0, 0], [0, 3]]) == AbelianInvariants((3,), 1)
    assert abelian_invariants(8, 5, 1) == AbelianInvariants((17,), 0)
    assert abelian_invariants(10, 1, 6).order == 31
    assert abelian_invariants(12, 7, 1).order == 65
    f26 = abelian_invariants(6, 1, 2)
    assert f26.order is not None and f26.order > 1


def test_str():
    assert str(abelian_invariants(8, 5, 1)) == "Z_17"
    assert str(AbelianInvariants((2, 4), 2)) == "Z^2 x Z_2 x Z_4"
    assert str(AbelianInvariants((), 0)) == "1"


def test_snf_matches_sympy_exhaustive():
    for n in range(2, 13):
        for m in range(n):
            for k in range(n):
                M = relation_matrix(n, m, k)
                assert smith_normal_form(M) == sympy_invariants(M), (n, m, k)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_snf_random_matrices(r, c, data):
    M = [[data.draw(st.integers(-30, 30)) for _ in range(c)] for _ in range(r)]
    inv = smith_normal_form(M)
    assert inv == sympy_invariants(M)
    for a, b in zip(inv.torsion, inv.torsion[1:]):
        assert b % a == 0


def test_determinant_resultant():
    # |det| against the product of f(zeta^j), f(t) = 1 + t^m - t^k, in floating point
    for n in range(2, 25):
        for m in range(n):
            for k in range(n):
                exact = abs(determinant(relation_matrix(n, m, k)))
                z = np.exp(2j * np.pi * np.arange(n) / n)
                approx = abs(np.prod(1 + z**m - z**k))
                assert approx == pytest.approx(exact, rel=1e-6, abs=1e-6)
                inv = abelian_invariants(n, m, k)
                if exact:
                    assert inv.order == exact and inv.rank == 0
                else:
                    assert inv.rank > 0


def test_invariant_under_isomorphisms():
    for n in range(3, 16):
        for m in range(n):
            for k in range(n):
                p = FibParams(n, m, k)
                inv = abelian_invariants(n, m, k)
                q = swap_iso(p)
                assert abelian_invariants(q.n, q.m, q.k) == inv
                for c in units(n):
                    r = rescale_iso(p, c)
                    assert abelian_invariants(r.n, r.m, r.k) == inv


def test_m0_order():
    for n in range(2, 21):
        for k in range(1, n):
            if gcd(n, k) == 1:
                assert abelian_invariants(n, 0, k).order == 2**n - 1
