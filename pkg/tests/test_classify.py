import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibtype.abelian import abelian_invariants
from fibtype.classify import (
    Classification,
    Family,
    Hyperbolicity,
    Tits,
    TitsKind,
    classify,
    clause,
    clauses_holding,
    describe,
    family_status,
    is_T5,
    is_T6_generic,
)
from fibtype.params import FibParams, ParameterError, rescale_iso, swap_iso, units
from fibtype.table_data import SMALL_ROWS

SQ = Tits(TitsKind.SQ_UNIVERSAL)


def test_examples():
    c = classify(14, 0, 3)
    assert c.family == Family("FiniteCyclic", (16383,)) and c.order == 2**14 - 1
    c = classify(16, 1, 8)
    assert c.family == Family("FiniteCyclic", (257,))
    c = classify(13, 2, 1)
    assert c.family == Family("Sieradski", (13,)) and c.hyperbolicity is Hyperbolicity.NOT_HYPERBOLIC and c.tits == SQ
    c = classify(18, 11, 1)
    assert c.family == Family("HalfShiftGH", (18,)) and c.hyperbolicity is Hyperbolicity.NOT_HYPERBOLIC
    c = classify(15, 1, 5)
    assert c.family == Family("OrderP", (3, 1)) and c.hyperbolicity is Hyperbolicity.NON_ELEMENTARY
    c = classify(13, 1, 2)
    assert c.family == Family("Fibonacci", (13,)) and c.hyperbolicity is Hyperbolicity.NON_ELEMENTARY
    c = classify(9, 4, 1)
    assert c.family.kind == "Unknown" and c.tits.kind is TitsKind.UNKNOWN
    c = classify(12, 5, 1)
    assert c.family == Family("TableEntry", ("H(12,5)",)) and c.hyperbolicity is Hyperbolicity.NOT_HYPERBOLIC
    assert c.tits == SQ
    c = classify(10, 7, 1)
    assert c.family == Family("TableEntry", ("H(10,7)",)) and c.tits.kind is TitsKind.FREE_SUBGROUP_ONLY
    c = classify(6, 1, 2)
    assert c.family == Family("Fibonacci", (6,)) and c.tits == Tits(TitsKind.VIRTUALLY_SOLVABLE, "virtually Z^3")


def test_n2_and_trivial():
    assert classify(2, 1, 0).order == 1        # F(2,2) = G_2(1,0)
    assert classify(2, 0, 1).order == 3        # S(2,2) = G_2(0,1)
    assert classify(2, 1, 1).order == 1        # H(2,3) = G_2(1,1)
    assert classify(7, 3, 3).family.kind == "Trivial"


def test_gcd_rejected():
    with pytest.raises(ParameterError, match="free product"):
        classify(6, 2, 4)


def test_unknown_only_for_two_groups():
    seen = set()
    for n in range(2, 13):
        for m in range(n):
            for k in range(n):
                try:
                    c = classify(n, m, k)
                except ParameterError:
                    continue
                if c.family.kind == "Unknown":
                    seen.add(c.name)
                assert (c.family.kind in ("Trivial", "FiniteCyclic")) <= (c.hyperbolicity is Hyperbolicity.FINITE)
                assert (c.hyperbolicity is Hyperbolicity.FINITE) == (c.finite is True)
    assert seen == {"H(9,4)", "H(9,7)"}


def test_family_status():
    s = family_status("Fibonacci", 7)
    assert s.hyperbolicity is Hyperbolicity.FINITE and s.order == 29
    s = family_status("Sieradski", 6)
    assert s.hyperbolicity is Hyperbolicity.NOT_HYPERBOLIC and s.tits.kind is TitsKind.VIRTUALLY_SOLVABLE
    s = family_status("GilbertHowie3", 7)
    assert s.tits == Tits(TitsKind.VIRTUALLY_SOLVABLE, "virtually Z^8")
    s = family_status("HalfShiftGH", 10)
    assert s.hyperbolicity is Hyperbolicity.NOT_HYPERBOLIC and s.tits.kind is TitsKind.FREE_SUBGROUP_ONLY
    assert family_status("Fibonacci", 8).hyperbolicity is Hyperbolicity.NON_ELEMENTARY
    assert family_status("Sieradski", 7).tits == SQ
    assert family_status("GilbertHowie3", 9).hyperbolicity is Hyperbolicity.NON_ELEMENTARY
    assert family_status("HalfShiftGH", 12).tits == SQ
    with pytest.raises(ParameterError):
        family_status("HalfShiftGH", 9)
    with pytest.raises(ParameterError):
        family_status("Nope", 9)


def test_small_table_families_agree_with_family_status():
    for row in SMALL_ROWS:
        if row.name.startswith("F(2,"):
            fam = "Fibonacci"
        elif row.name.startswith("S(2,"):
            fam = "Sieradski"
        elif row.name == f"H({row.n},3)":
            fam = "GilbertHowie3"
        else:
            continue
        c = classify(row.n, row.m, row.k)
        s = family_status(fam, row.n)
        assert (c.hyperbolicity, c.tits) == (s.hyperbolicity, s.tits), row.name


def test_is_T5_examples():
    assert is_T5(5, 1, 2)
    assert not is_T5(8, 1, 2)
    assert is_T5(10, 7, 1)


def test_is_T6_generic_examples():
    assert is_T6_generic(11, 4, 1)
    assert is_T6_generic(12, 6, 1)
    for n in range(8, 30):
        assert not is_T6_generic(n, 1, 2)


def test_h84_generic_test_open_question():
    # the generic test accepts H(8,4) but the group is not hyperbolic; the table wins
    assert is_T6_generic(8, 4, 1)
    assert classify(8, 4, 1).hyperbolicity is Hyperbolicity.NOT_HYPERBOLIC


def test_clauses_n_ge_13():
    for n in range(13, 30):
        for m in range(n):
            for k in range(n):
                p = FibParams(n, m, k)
                if p.decomposes or p.trivial:
                    continue
                holding = clauses_holding(n, m, k)
                assert len(holding) == 1, (n, m, k, holding)
                assert holding[0] == clause(n, m, k)
                hyp = classify(n, m, k).hyperbolicity is Hyperbolicity.NON_ELEMENTARY
                A, B = p.A, p.B
                exceptional = A == B or 2 * A % n == 0 or 2 * B % n == 0 or (A + B) % n == 0 \
                    or (n % 2 == 0 and (A + B) % n == n // 2)
                assert hyp == (not exceptional)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1), st.integers(0, n - 1))),
       st.data())
def test_classify_orbit_invariant(nmk, data):
    n, m, k = nmk
    p = FibParams(n, m, k)
    if p.decomposes:
        return
    c = classify(n, m, k)
    q = swap_iso(p)
    assert classify(q.n, q.m, q.k).verdict() == c.verdict()
    u = data.draw(st.sampled_from(units(n)))
    r = rescale_iso(p, u)
    assert classify(r.n, r.m, r.k).verdict() == c.verdict()


def test_cyclic_orders_match_abelianisation():
    for n in range(2, 25):
        for m in range(n):
            for k in range(n):
                p = FibParams(n, m, k)
                if p.decomposes:
                    continue
                c = classify(n, m, k)
                if c.family.kind in ("Trivial", "FiniteCyclic"):
                    assert abelian_invariants(n, m, k).order == c.order, (n, m, k)


def test_serialisation_round_trip():
    for nmk in [(9, 4, 1), (13, 2, 1), (8, 3, 1), (15, 1, 5), (6, 1, 2)]:
        c = classify(*nmk)
        assert Classification.from_dict(c.to_dict()) == c


def test_describe():
    assert describe(classify(9, 4, 1)) == "unknown (open problem)"
    assert describe(classify(13, 2, 1)) == "not hyperbolic, SQ-universal"
    assert describe(classify(8, 5, 1)) == "finite of order 17"
