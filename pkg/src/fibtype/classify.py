"""Hyperbolicity, finiteness and Tits-alternative verdicts for G_n(m, k).

Dispatch order for valid parameters (gcd(n, m, k) = 1):

1. A = 0 or B = 0: trivial group.
2. m = 0: cyclic of order 2^n - 1.
3. n <= 12: look up the orbit key in the small-n table.
4. n >= 13: the five congruence clauses, tried in order
   A = B, A or B = n/2, A + B = 0, A + B = n/2, otherwise hyperbolic,
   with the last clause refined into the congruence families.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import lru_cache

from .params import (
    FREE_PRODUCT_MESSAGE,
    FibParams,
    OrbitKey,
    ParameterError,
    canonicalize,
    derive,
    has_additive_order,
    is_half,
)
from .table_data import INF, ORDER_VALUES, SMALL_ROWS, SmallRow


class TableError(RuntimeError):
    """The static small-n table does not cover a parameter orbit."""


class Hyperbolicity(str, Enum):
    NON_ELEMENTARY = "NonElementaryHyperbolic"
    NOT_HYPERBOLIC = "NotHyperbolic"
    FINITE = "Finite"
    UNKNOWN = "Unknown"


class TitsKind(str, Enum):
    FINITE = "Finite"
    VIRTUALLY_SOLVABLE = "VirtuallySolvable"
    SQ_UNIVERSAL = "SQUniversal"
    FREE_SUBGROUP_ONLY = "FreeSubgroupOnly"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Tits:
    kind: TitsKind
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.kind.value}({self.detail})" if self.detail else self.kind.value


FAMILY_KINDS = (
    "Trivial", "FiniteCyclic", "Fibonacci", "Sieradski", "GilbertHowie",
    "HalfShiftGH", "OrderP", "GenericT6", "TableEntry", "Unknown",
)


@dataclass(frozen=True)
class Family:
    kind: str
    args: tuple = ()

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")

    def __str__(self) -> str:
        if not self.args:
            return self.kind
        return f"{self.kind}({', '.join(map(str, self.args))})"


@dataclass(frozen=True)
class Classification:
    n: int
    m: int
    k: int
    name: str
    family: Family
    group: str
    order: int | None          # exact order when finite
    finite: bool | None        # None when finiteness is open
    hyperbolicity: Hyperbolicity
    tits: Tits
    T5: bool
    T6: bool
    provenance: str
    key: OrbitKey | None = field(default=None, compare=False)

    def verdict(self) -> tuple:
        """Isomorphism-invariant part of the classification."""
        return (self.family.kind, self.order, self.finite, self.hyperbolicity, self.tits, self.T5, self.T6)

    def order_text(self) -> str:
        if self.finite is None:
            return "?"
        return str(self.order) if self.finite else INF

    def to_dict(self) -> dict:
        d = asdict(self)
        d["family"] = {"kind": self.family.kind, "args": list(self.family.args)}
        d["hyperbolicity"] = self.hyperbolicity.value
        d["tits"] = {"kind": self.tits.kind.value, "detail": self.tits.detail}
        d["key"] = list(self.key) if self.key is not None else None
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Classification:
        return cls(
            n=d["n"], m=d["m"], k=d["k"], name=d["name"],
            family=Family(d["family"]["kind"], tuple(d["family"]["args"])),
            group=d["group"], order=d["order"], finite=d["finite"],
            hyperbolicity=Hyperbolicity(d["hyperbolicity"]),
            tits=Tits(TitsKind(d["tits"]["kind"]), d["tits"]["detail"]),
            T5=d["T5"], T6=d["T6"], provenance=d["provenance"],
            key=OrbitKey(*d["key"]) if d["key"] is not None else None,
        )


# ---------------------------------------------------------------- congruences

def _t5_residues(n: int, A: int, B: int) -> bool:
    if (A + B) % n == 0 or (A - B) % n == 0:
        return False
    return all((t * A) % n and (t * B) % n for t in range(1, 5))


def _t6_residues(n: int, A: int, B: int) -> bool:
    if not all((t * A) % n and (t * B) % n for t in range(1, 6)):
        return False
    combos = (A + B, A - B, A + 2 * B, A - 2 * B, B + 2 * A, B - 2 * A)
    return all(c % n for c in combos)


def is_T5(n: int, m: int, k: int) -> bool:
    """Congruence form of T(5): A +- B != 0 and tA, tB != 0 mod n for 1 <= t <= 4."""
    p = derive(n, m, k)
    return _t5_residues(n, p.A, p.B)


def t6_profile(n: int, m: int, k: int) -> bool:
    """Congruence form of T(6) (star-graph girth >= 6).

    tA, tB != 0 for 1 <= t <= 5 and none of A +- B, A +- 2B, B +- 2A is 0 mod n.
    """
    p = derive(n, m, k)
    return _t6_residues(n, p.A, p.B)


def _exact_fraction(x: int, n: int, q: int) -> bool:
    # x = s*n/q for some s coprime to q
    return has_additive_order(x, n, q)


def is_T6_generic(n: int, m: int, k: int) -> bool:
    """True iff none of the congruences excluded from the generic hyperbolic T(6) case hold."""
    p = derive(n, m, k)
    A, B = p.A, p.B
    for X in (A, B):
        if any(_exact_fraction(X, n, q) for q in (2, 3, 4, 5)):
            return False
    combos = (A + B, A - B, A + 2 * B, A - 2 * B, B + 2 * A, B - 2 * A)
    if any(c % n == 0 for c in combos):
        return False
    return not is_half(A + B, n)


# ------------------------------------------------------------- family status

FAMILIES_WITH_STATUS = ("Fibonacci", "Sieradski", "GilbertHowie3", "HalfShiftGH")

_FIB_FINITE = {2: 1, 3: 8, 4: 5, 5: 11, 7: 29}
_SIER_FINITE = {2: 3, 3: 8, 4: 24, 5: 120}
_GH3_FINITE = {2: 1, 3: 7, 4: 5, 5: 11, 6: 56, 8: 3**10 * 5}
_HALF_FINITE = {2: 1, 4: 15}


@dataclass(frozen=True)
class FamilyStatus:
    hyperbolicity: Hyperbolicity
    tits: Tits
    provenance: str
    order: int | None = None


def _finite(order: int, prov: str) -> FamilyStatus:
    return FamilyStatus(Hyperbolicity.FINITE, Tits(TitsKind.FINITE), prov, order)


def family_status(family: str, n: int) -> FamilyStatus:
    """Hyperbolicity and Tits status of a named family at rank n."""
    if n < 2:
        raise ParameterError(f"need n >= 2, got n={n}")
    sq = Tits(TitsKind.SQ_UNIVERSAL)
    if family == "Fibonacci":
        if n in _FIB_FINITE:
            return _finite(_FIB_FINITE[n], "F(2,n) finite for n in {2,3,4,5,7}")
        if n == 6:
            return FamilyStatus(Hyperbolicity.NOT_HYPERBOLIC,
                                Tits(TitsKind.VIRTUALLY_SOLVABLE, "virtually Z^3"),
                                "F(2,6) is virtually Z^3")
        return FamilyStatus(Hyperbolicity.NON_ELEMENTARY, sq, "F(2,n) non-elementary hyperbolic for n >= 8")
    if family == "Sieradski":
        if n in _SIER_FINITE:
            return _finite(_SIER_FINITE[n], "S(2,n) finite for n < 6")
        if n == 6:
            return FamilyStatus(Hyperbolicity.NOT_HYPERBOLIC,
                                Tits(TitsKind.VIRTUALLY_SOLVABLE, "metabelian"),
                                "S(2,6) is infinite metabelian containing Z^2")
        return FamilyStatus(Hyperbolicity.NOT_HYPERBOLIC, sq,
                            "S(2,n) acts cocompactly on the universal cover of SL(2,R) for n >= 7")
    if family == "GilbertHowie3":
        if n in _GH3_FINITE:
            return _finite(_GH3_FINITE[n], "H(n,3) finite for n in {2,3,4,5,6,8}")
        if n == 7:
            return FamilyStatus(Hyperbolicity.NOT_HYPERBOLIC,
                                Tits(TitsKind.VIRTUALLY_SOLVABLE, "virtually Z^8"),
                                "H(7,3) is virtually Z^8")
        return FamilyStatus(Hyperbolicity.NON_ELEMENTARY, sq, "H(n,3) non-elementary hyperbolic for n >= 9")
    if family == "HalfShiftGH":
        if n % 2:
            raise ParameterError(f"H(n,n/2+2) needs even n, got n={n}")
        if n in _HALF_FINITE:
            return _finite(_HALF_FINITE[n], "H(n,n/2+2) finite for n in {2,4}")
        if n == 6:
            return FamilyStatus(Hyperbolicity.NOT_HYPERBOLIC,
                                Tits(TitsKind.VIRTUALLY_SOLVABLE, "virtually Z^3"),
                                "H(6,5) is isomorphic to F(2,6)")
        if n == 10:
            return FamilyStatus(Hyperbolicity.NOT_HYPERBOLIC, Tits(TitsKind.FREE_SUBGROUP_ONLY),
                                "H(10,7) is not hyperbolic and contains a non-abelian free subgroup")
        return FamilyStatus(Hyperbolicity.NOT_HYPERBOLIC, sq,
                            "H(n,n/2+2) not hyperbolic and SQ-universal for even n >= 8, n != 10")
    raise ParameterError(f"no status table for family {family!r}; expected one of {FAMILIES_WITH_STATUS}")


# ------------------------------------------------------------ small-n table

def _row_verdicts(row: SmallRow) -> tuple[Family, int | None, bool | None, Hyperbolicity, Tits]:
    n = row.n
    if row.order == "?":
        order, finite = None, None
    elif row.order == INF:
        order, finite = None, False
    else:
        order, finite = ORDER_VALUES.get(row.order) or int(row.order), True

    if finite:
        hyp = Hyperbolicity.FINITE
    else:
        hyp = {"Yes": Hyperbolicity.NON_ELEMENTARY, "No": Hyperbolicity.NOT_HYPERBOLIC,
               "?": Hyperbolicity.UNKNOWN}[row.hyp]

    tits = {
        "finite": Tits(TitsKind.FINITE),
        "SQ-univ.": Tits(TitsKind.SQ_UNIVERSAL),
        "Free subgroup": Tits(TitsKind.FREE_SUBGROUP_ONLY),
        "?": Tits(TitsKind.UNKNOWN),
    }.get(row.tits) or Tits(TitsKind.VIRTUALLY_SOLVABLE, row.tits)

    if row.name.startswith("F(2,"):
        fam = Family("Fibonacci", (n,))
    elif row.name.startswith("S(2,"):
        fam = Family("Sieradski", (n,))
    elif row.name == f"H({n},3)":
        fam = Family("GilbertHowie", (n, 3))
    elif finite is None:
        fam = Family("Unknown")
    elif row.group.startswith("cyclic"):
        fam = Family("FiniteCyclic", (order,))
    else:
        fam = Family("TableEntry", (row.name,))
    return fam, order, finite, hyp, tits


@lru_cache(maxsize=None)
def small_table() -> dict[tuple[int, OrbitKey], SmallRow]:
    """Map (n, orbit key) -> small-n row; raises if two rows share a key."""
    table: dict[tuple[int, OrbitKey], SmallRow] = {}
    for row in SMALL_ROWS:
        key = (row.n, canonicalize(FibParams(row.n, row.m, row.k)))
        if key in table:
            raise TableError(f"rows {table[key].name} and {row.name} share orbit key {key[1]}")
        table[key] = row
    return table


def small_row(n: int, m: int, k: int) -> SmallRow:
    p = derive(n, m, k)
    try:
        return small_table()[(n, canonicalize(p))]
    except KeyError:
        raise TableError(f"no small-n table row for {p.name()} (orbit key {canonicalize(p)})") from None


# ----------------------------------------------------------------- classify

def cyclic_half_order(n: int, m: int) -> int:
    """Order 2^(n/2) - (-1)^(m + n/2) of the cyclic group when A or B = n/2."""
    h = n // 2
    return 2**h - (-1) ** ((m + h) % 2)


def cyclic_m0_order(n: int) -> int:
    return 2**n - 1


def _additive_order_in(x: int, n: int, ps=(3, 4, 5)) -> int | None:
    for p in ps:
        if has_additive_order(x, n, p):
            return p
    return None


def clause(n: int, m: int, k: int) -> str:
    """Which of the five congruence clauses (a)-(e) applies for n >= 13, in precedence order."""
    p = derive(n, m, k)
    A, B = p.A, p.B
    if A == B:
        return "a"
    if is_half(A, n) or is_half(B, n):
        return "b"
    if (A + B) % n == 0:
        return "c"
    if is_half(A + B, n):
        return "d"
    return "e"


def clauses_holding(n: int, m: int, k: int) -> list[str]:
    """Every clause whose literal condition holds (no precedence applied)."""
    p = derive(n, m, k)
    A, B = p.A, p.B
    out = []
    if A == B:
        out.append("a")
    if is_half(A, n) or is_half(B, n):
        out.append("b")
    if (A + B) % n == 0:
        out.append("c")
    if is_half(A + B, n):
        out.append("d")
    if not (is_half(A, n) or is_half(B, n) or (A + B) % n == 0 or A == B or is_half(A + B, n)):
        out.append("e")
    return out


def _build(p: FibParams, name, family, group, order, finite, hyp, tits, prov, key=None) -> Classification:
    return Classification(
        n=p.n, m=p.m, k=p.k, name=name, family=family, group=group, order=order, finite=finite,
        hyperbolicity=hyp, tits=tits, T5=_t5_residues(p.n, p.A, p.B), T6=_t6_residues(p.n, p.A, p.B),
        provenance=prov, key=key,
    )


def _cyclic(p: FibParams, order: int, prov: str, name: str | None = None) -> Classification:
    fam = Family("Trivial") if order == 1 else Family("FiniteCyclic", (order,))
    return _build(p, name or p.name(), fam, f"Z_{order}" if order > 1 else "1", order, True,
                  Hyperbolicity.FINITE, Tits(TitsKind.FINITE), prov)


def classify(n: int, m: int, k: int) -> Classification:
    p = derive(n, m, k)
    if p.decomposes:
        raise ParameterError(FREE_PRODUCT_MESSAGE)
    if p.trivial:
        return _cyclic(p, 1, "k = 0 or m = k: trivial group")
    if p.m == 0:
        return _cyclic(p, cyclic_m0_order(n), "m = 0: cyclic of order 2^n-1")
    if n <= 12:
        return _classify_small(p)
    return _classify_large(p)


def _classify_small(p: FibParams) -> Classification:
    row = small_row(p.n, p.m, p.k)
    fam, order, finite, hyp, tits = _row_verdicts(row)
    return _build(p, row.name, fam, row.group, order, finite, hyp, tits,
                  f"small-n table row {row.name}", key=canonicalize(p))


def _classify_large(p: FibParams) -> Classification:
    n, A, B = p.n, p.A, p.B
    sq = Tits(TitsKind.SQ_UNIVERSAL)
    c = clause(n, p.m, p.k)
    if c == "a":
        return _cyclic(p, cyclic_m0_order(n), "A = B: cyclic of order 2^n-1")
    if c == "b":
        return _cyclic(p, cyclic_half_order(n, p.m), "A or B = n/2: cyclic of order 2^(n/2)-(-1)^(m+n/2)")
    if c == "c":
        return _build(p, f"S(2,{n})", Family("Sieradski", (n,)), f"S(2,{n})", None, False,
                      Hyperbolicity.NOT_HYPERBOLIC, sq, "A + B = 0: isomorphic to S(2,n)")
    if c == "d":
        name = f"H({n},{n // 2 + 2})"
        return _build(p, name, Family("HalfShiftGH", (n,)), name, None, False,
                      Hyperbolicity.NOT_HYPERBOLIC, sq, "A + B = n/2: isomorphic to H(n,n/2+2)")

    hyp = Hyperbolicity.NON_ELEMENTARY
    if _additive_order_in(A, n) is not None or _additive_order_in(B, n) is not None:
        # family arguments from the orbit representative, so isomorphic parameters agree
        cands = [(_additive_order_in(Y, n), i, Y) for i, Y in enumerate(canonicalize(p))]
        q, _, Y = min(c for c in cands if c[0] is not None)
        s = Y * q // n
        return _build(p, p.name(), Family("OrderP", (q, s)), "", None, False, hyp, sq,
                      f"A or B = sn/p with p = {q}: non-elementary hyperbolic")
    if (A - 2 * B) % n == 0 or (B - 2 * A) % n == 0:
        return _build(p, f"F(2,{n})", Family("Fibonacci", (n,)), "F(2,n), T(5)", None, False, hyp, sq,
                      "A = 2B or B = 2A: isomorphic to F(2,n)")
    if (A + 2 * B) % n == 0 or (B + 2 * A) % n == 0:
        return _build(p, f"H({n},3)", Family("GilbertHowie", (n, 3)), "H(n,3), T(5)", None, False, hyp, sq,
                      "A + 2B = 0 or B + 2A = 0: isomorphic to H(n,3)")
    return _build(p, p.name(), Family("GenericT6"), "T(6)", None, False, hyp, sq,
                  "no exceptional congruence: T(6) and non-elementary hyperbolic")


def render_line(c: Classification) -> str:
    """One-line, tab-separated rendering of a classification."""
    return "\t".join([
        f"n={c.n}", f"m={c.m}", f"k={c.k}", f"name={c.name}", f"family={c.family}",
        f"order={c.order_text()}", f"hyperbolicity={c.hyperbolicity.value}", f"tits={c.tits}",
        f"T5={'yes' if c.T5 else 'no'}", f"T6={'yes' if c.T6 else 'no'}", f"provenance={c.provenance}",
    ])


def describe(c: Classification) -> str:
    """Short human-readable verdict."""
    if c.hyperbolicity is Hyperbolicity.UNKNOWN and c.tits.kind is TitsKind.UNKNOWN:
        return "unknown (open problem)"
    if c.hyperbolicity is Hyperbolicity.FINITE:
        return f"finite of order {c.order}"
    parts = {
        Hyperbolicity.NON_ELEMENTARY: "non-elementary hyperbolic",
        Hyperbolicity.NOT_HYPERBOLIC: "not hyperbolic",
        Hyperbolicity.UNKNOWN: "hyperbolicity unknown",
    }[c.hyperbolicity]
    tits = {
        TitsKind.SQ_UNIVERSAL: "SQ-universal",
        TitsKind.FREE_SUBGROUP_ONLY: "contains a non-abelian free subgroup",
        TitsKind.VIRTUALLY_SOLVABLE: f"{c.tits.detail}, not SQ-universal",
        TitsKind.UNKNOWN: "Tits alternative unknown",
        TitsKind.FINITE: "finite",
    }[c.tits.kind]
    return f"{parts}, {tits}"
