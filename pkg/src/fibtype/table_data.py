"""Static facts about G_n(m, k) for 3 <= n <= 12 and the congruence families for n >= 13.

Each small-n row is keyed by the (m, k) its name denotes; the lookup key
(the orbit key) is computed from these parameters at import time, so a
row cannot silently drift from the group it names.
"""
from __future__ import annotations

from typing import NamedTuple


class SmallRow(NamedTuple):
    n: int
    name: str
    m: int
    k: int
    group: str      # the "Group" column ("" when blank)
    order: str      # "8", "3^10·5", "∞" or "?"
    hyp: str        # "Yes", "No" or "?"
    tits: str       # "finite", "SQ-univ.", "Free subgroup", "virtually Z^3", ...


INF = "∞"

SMALL_ROWS: tuple[SmallRow, ...] = (
    SmallRow(3, "F(2,3)", 1, 2, "Q_8", "8", "No", "finite"),

    SmallRow(4, "F(2,4)", 1, 2, "cyclic", "5", "No", "finite"),
    SmallRow(4, "S(2,4)", 2, 1, "SL(2,3)", "24", "No", "finite"),

    SmallRow(5, "F(2,5)", 1, 2, "cyclic, T(5)", "11", "No", "finite"),
    SmallRow(5, "S(2,5)", 2, 1, "SL(2,5)", "120", "No", "finite"),

    SmallRow(6, "F(2,6)", 1, 2, "3-mfd. gp.", INF, "No", "virtually Z^3"),
    SmallRow(6, "S(2,6)", 2, 1, "3-mfd. gp.", INF, "No", "metabelian"),
    SmallRow(6, "H(6,3)", 3, 1, "Z_2^3⋊Z_7", "56", "No", "finite"),
    SmallRow(6, "H(6,4)", 4, 1, "cyclic", "9", "No", "finite"),
    SmallRow(6, "G_6(1,3)", 1, 3, "cyclic", "7", "No", "finite"),

    SmallRow(7, "F(2,7)", 1, 2, "cyclic, T(5)", "29", "No", "finite"),
    SmallRow(7, "S(2,7)", 2, 1, "3-mfd. gp.", INF, "No", "SQ-univ."),
    SmallRow(7, "H(7,3)", 3, 1, "T(5)", INF, "No", "virtually Z^8"),

    SmallRow(8, "F(2,8)", 1, 2, "3-mfd. gp.", INF, "Yes", "SQ-univ."),
    SmallRow(8, "S(2,8)", 2, 1, "3-mfd. gp.", INF, "No", "SQ-univ."),
    SmallRow(8, "H(8,3)", 3, 1, "solvable", "3^10·5", "No", "finite"),
    SmallRow(8, "H(8,4)", 4, 1, "T(6)", INF, "No", "SQ-univ."),
    SmallRow(8, "H(8,5)", 5, 1, "cyclic", "17", "No", "finite"),
    SmallRow(8, "H(8,6)", 6, 1, "T(6)", INF, "No", "SQ-univ."),

    SmallRow(9, "F(2,9)", 1, 2, "T(5)", INF, "Yes", "SQ-univ."),
    SmallRow(9, "S(2,9)", 2, 1, "3-mfd. gp.", INF, "No", "SQ-univ."),
    SmallRow(9, "H(9,3)", 3, 1, "T(5)", INF, "Yes", "SQ-univ."),
    SmallRow(9, "H(9,4)", 4, 1, "", "?", "?", "?"),
    SmallRow(9, "H(9,7)", 7, 1, "", "?", "?", "?"),

    SmallRow(10, "F(2,10)", 1, 2, "3-mfd. gp., T(5)", INF, "Yes", "SQ-univ."),
    SmallRow(10, "S(2,10)", 2, 1, "3-mfd. gp.", INF, "No", "SQ-univ."),
    SmallRow(10, "H(10,3)", 3, 1, "T(5)", INF, "Yes", "SQ-univ."),
    SmallRow(10, "H(10,7)", 7, 1, "T(5)", INF, "No", "Free subgroup"),
    SmallRow(10, "H(10,4)", 4, 1, "T(6)", INF, "Yes", "SQ-univ."),
    SmallRow(10, "H(10,5)", 5, 1, "T(5)", INF, "Yes", "SQ-univ."),
    SmallRow(10, "H(10,6)", 6, 1, "cyclic", "33", "No", "finite"),
    SmallRow(10, "G_10(1,6)", 1, 6, "cyclic", "31", "No", "finite"),

    SmallRow(11, "F(2,11)", 1, 2, "T(5)", INF, "Yes", "SQ-univ."),
    SmallRow(11, "S(2,11)", 2, 1, "3-mfd. gp.", INF, "No", "SQ-univ."),
    SmallRow(11, "H(11,3)", 3, 1, "T(5)", INF, "Yes", "SQ-univ."),
    SmallRow(11, "H(11,4)", 4, 1, "T(6)", INF, "Yes", "SQ-univ."),
    SmallRow(11, "H(11,8)", 8, 1, "T(6)", INF, "Yes", "SQ-univ."),

    SmallRow(12, "F(2,12)", 1, 2, "3-mfd. gp., T(5)", INF, "Yes", "SQ-univ."),
    SmallRow(12, "S(2,12)", 2, 1, "3-mfd. gp.", INF, "No", "SQ-univ."),
    SmallRow(12, "H(12,3)", 3, 1, "T(5)", INF, "Yes", "SQ-univ."),
    SmallRow(12, "H(12,8)", 8, 1, "T(6)", INF, "No", "SQ-univ."),
    SmallRow(12, "H(12,7)", 7, 1, "cyclic", "65", "No", "finite"),
    SmallRow(12, "H(12,6)", 6, 1, "T(6)", INF, "Yes", "SQ-univ."),
    SmallRow(12, "H(12,5)", 5, 1, "", INF, "No", "SQ-univ."),
    SmallRow(12, "H(12,4)", 4, 1, "", INF, "Yes", "SQ-univ."),
    SmallRow(12, "H(12,9)", 9, 1, "", INF, "Yes", "SQ-univ."),
    SmallRow(12, "H(12,10)", 10, 1, "", INF, "Yes", "SQ-univ."),
    SmallRow(12, "G_12(1,3)", 1, 3, "", INF, "Yes", "SQ-univ."),
    SmallRow(12, "G_12(1,9)", 1, 9, "", INF, "Yes", "SQ-univ."),
)

# exact values of the finite orders that are not plain integers in the table
ORDER_VALUES = {"3^10·5": 3**10 * 5}


class CongruenceRow(NamedTuple):
    congruence: str
    group: str
    hyp: str
    tits: str


CONGRUENCE_ROWS: tuple[CongruenceRow, ...] = (
    CongruenceRow("B≡n/2 or A≡n/2", "Z_{2^(n/2)-(-1)^(m+n/2)}", "No", "finite"),
    CongruenceRow("B≡sn/p or A≡sn/p, (s,p)=1, p∈{3,4,5}", "", "Yes", "SQ-univ."),
    CongruenceRow("A+B≡0", "S(2,n)", "No", "SQ-univ."),
    CongruenceRow("A-B≡0", "Z_{2^n-1}", "No", "finite"),
    CongruenceRow("A-2B≡0 or B-2A≡0", "F(2,n), T(5)", "Yes", "SQ-univ."),
    CongruenceRow("A+2B≡0 or B+2A≡0", "H(n,3), T(5)", "Yes", "SQ-univ."),
    CongruenceRow("B+A≡n/2", "H(n,n/2+2), T(6)", "No", "SQ-univ."),
    CongruenceRow("None of the above", "T(6)", "Yes", "SQ-univ."),
)
