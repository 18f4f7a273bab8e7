"""Command-line front end.

Exit codes: 0 success, 1 invalid input or failed validation, 2 resource
limit (coset overflow, cycle budget).  Data goes to stdout, diagnostics to
stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from .abelian import abelian_invariants
from .classify import (
    Classification,
    Hyperbolicity,
    TableError,
    TitsKind,
    classify,
    describe,
    is_T5,
    is_T6_generic,
    render_line,
    t6_profile,
)
from .coset import Closed, enumerate_cosets
from .params import ParameterError, case_representatives, derive
from .stargraph import BudgetError, fib_star_graph, girth, interior_vertex_census, short_cycles
from .table_data import CONGRUENCE_ROWS, SMALL_ROWS
from .words import CyclicPresentation, fib_word

log = logging.getLogger("fibtype")

EXIT_OK, EXIT_INVALID, EXIT_LIMIT = 0, 1, 2


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------- table

@dataclass(frozen=True)
class ReportRow:
    n: int | None
    m: int | None
    k: int | None
    name: str            # F/S/H/G name, or the congruence for n >= 13
    group: str
    order: str
    hyperbolic: str      # "Yes", "No" or "?"
    tits: str
    provenance: str
    count: int | None = None   # parameter pairs of this n falling in the row (n >= 13)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> ReportRow:
        return cls(**d)

    def line(self) -> str:
        cells = [self.name, self.group, self.order, self.hyperbolic, self.tits]
        if self.count is not None:
            cells.append(str(self.count))
        return "\t".join(cells)


def _hyp_column(c: Classification) -> str:
    if c.hyperbolicity is Hyperbolicity.NON_ELEMENTARY:
        return "Yes"
    if c.hyperbolicity is Hyperbolicity.UNKNOWN:
        return "?"
    return "No"


def _tits_column(c: Classification) -> str:
    return {
        TitsKind.FINITE: "finite",
        TitsKind.SQ_UNIVERSAL: "SQ-univ.",
        TitsKind.FREE_SUBGROUP_ONLY: "Free subgroup",
        TitsKind.UNKNOWN: "?",
    }.get(c.tits.kind) or c.tits.detail


def small_rows(n: int) -> list[ReportRow]:
    out = []
    for row in SMALL_ROWS:
        if row.n != n:
            continue
        c = classify(n, row.m, row.k)
        out.append(ReportRow(n, row.m, row.k, c.name, c.group, c.order_text(), _hyp_column(c),
                             _tits_column(c), c.provenance))
    return out


def _congruence_index(c: Classification) -> int | None:
    kind = c.family.kind
    if kind == "FiniteCyclic" or kind == "Trivial":
        # A = B (including m = 0) versus A or B = n/2
        p = derive(c.n, c.m, c.k)
        if p.A == p.B:
            return 3
        return 0 if kind == "FiniteCyclic" else None
    return {"OrderP": 1, "Sieradski": 2, "Fibonacci": 4, "GilbertHowie": 5,
            "HalfShiftGH": 6, "GenericT6": 7}.get(kind)


def congruence_rows(n: int) -> list[ReportRow]:
    counts = [0] * len(CONGRUENCE_ROWS)
    orders: list[set[int]] = [set() for _ in CONGRUENCE_ROWS]
    for m in range(n):
        for k in range(n):
            try:
                c = classify(n, m, k)
            except ParameterError:
                continue
            i = _congruence_index(c)
            if i is not None:
                counts[i] += 1
                if c.order is not None:
                    orders[i].add(c.order)
    out = []
    for i, r in enumerate(CONGRUENCE_ROWS):
        if r.tits != "finite":
            order = "∞"
        elif orders[i]:
            # exact orders met at this n, e.g. both signs of 2^(n/2) -+ 1
            order = "/".join(str(x) for x in sorted(orders[i]))
        else:
            order = "finite"
        out.append(ReportRow(n, None, None, r.congruence, r.group, order, r.hyp, r.tits,
                             "congruence family", counts[i]))
    return out


def table_report(ns: list[int]) -> list[ReportRow]:
    rows = []
    for n in ns:
        rows += small_rows(n) if n <= 12 else congruence_rows(n)
    return rows


def parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            ns = list(range(int(lo), int(hi) + 1))
        else:
            ns = [int(text)]
    except ValueError:
        raise CliError(f"bad range {text!r}; expected N or LO..HI") from None
    if not ns or min(ns) < 3:
        raise CliError(f"range {text!r} must be non-empty with n >= 3")
    return ns


# ---------------------------------------------------------------- diagram audit

def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def audit_report(text: str) -> dict:
    """Everything `diagram audit` prints, as a JSON-compatible dict."""
    from .diagram.coloring import black_white_violations, color_faces, forbidden_patterns, parse_disk
    from .diagram.lanes import lane_curvature, lane_decomposition, lane_shape
    from .diagram.model import (boundary_word, cancelling_pairs, curvature_report, parse_and_validate,
                                split_abab_inverse, xx_violations, z_placement_check)

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed: not a JSON document: {exc}") from None
    report: dict = {}
    if isinstance(doc, dict) and doc.get("kind") == "colored-disk":
        cd = parse_disk(text)
        report["kind"] = "colored-disk"
        report["name"] = cd.name
        d = None
    else:
        d = parse_and_validate(text)
        cd = color_faces(d)
        w = boundary_word(d)
        split = split_abab_inverse(w)
        cr = curvature_report(d)
        report.update({
            "kind": "diagram",
            "n": d.n, "m": d.m, "k": d.k,
            "vertices": len(d.vertices), "edges": len(d.edges), "faces": len(d.faces),
            "interior_vertices": len(d.interior_vertices()),
            "reduced": not cancelling_pairs(d),
            "cancelling_pairs": [list(p) for p in cancelling_pairs(d)],
            "boundary_word": str(w),
            "boundary_length": len(w),
            "abab_inverse": None if split is None else {"a": str(split[0]), "b": str(split[1])},
            "gauss_bonnet_total": _frac(cr.total),
            "face_curvature": {str(f): _frac(x) for f, x in cr.faces.items()},
            "z_placement_violations": [list(v) for v in z_placement_check(d)],
            "xx_violations": xx_violations(d),
        })
    report["colors"] = {str(f): c for f, c in cd.color.items()}
    report["black_with_two_white"] = [str(f) for f in black_white_violations(cd)]
    report["forbidden_patterns"] = [m.pattern for m in forbidden_patterns(cd)]
    ls = lane_decomposition(cd)
    lc = lane_curvature(d, ls) if d is not None else None
    lanes = []
    for i, e in enumerate(ls.elements):
        lanes.append({
            "id": i, "name": e.name, "type": list(e.type),
            "faces": sorted(str(f) for f in e.faces),
            "shapes": [lane_shape(x) for x in e.lanes],
            "kappa": None if lc is None else _frac(lc.kappa[i]),
            "avg": None if lc is None else _frac(lc.average[i]),
        })
    report["lanes"] = lanes
    report["maximal_lanes"] = [{"home": str(x.home), "type": list(x.type),
                                "junction": None if x.junction is None else str(x.junction)}
                               for x in ls.maximal]
    if lc is not None:
        report["kappa_L"] = None if lc.kappa_max is None else _frac(lc.kappa_max)
        report["lane_hypothesis"] = lc.hypothesis
        report["lane_hypothesis_detail"] = lc.reason
        report["lane_verdict"] = lc.verdict
    return report


def render_audit(r: dict) -> list[str]:
    out = []
    if r["kind"] == "diagram":
        red = "reduced" if r["reduced"] else "not reduced"
        if r["abab_inverse"] is not None:
            bnd = "a b a b^-1"
        else:
            bnd = r["boundary_word"]
        out.append(f"valid, {red}, boundary = {bnd}, GB total = {r['gauss_bonnet_total']}")
        if r["abab_inverse"] is not None:
            out.append(f"a = {r['abab_inverse']['a']}")
            out.append(f"b = {r['abab_inverse']['b']}")
        out.append(f"boundary word: {r['boundary_word']} (length {r['boundary_length']})")
        out.append(f"P_{r['n']}({r['m']},{r['k']}): V={r['vertices']} E={r['edges']} F={r['faces']} "
                   f"interior vertices={r['interior_vertices']}")
        out.append(f"z-placement violations: {len(r['z_placement_violations'])}")
        out.append(f"XX vertex labels: {len(r['xx_violations'])}")
        out.append("face kappa:")
        out += [f"  {f}\t{x}" for f, x in r["face_curvature"].items()]
    else:
        nb = sum(1 for c in r["colors"].values() if c == "black")
        out.append(f"colored disk {r['name']!r}: {len(r['colors'])} faces, {nb} black")
    if r["forbidden_patterns"]:
        out += [f"forbidden pattern #{i} matched" for i in r["forbidden_patterns"]]
    else:
        out.append("no forbidden patterns")
    out.append("lane id | type | faces | kappa | avg")
    for x in r["lanes"]:
        kap = "-" if x["kappa"] is None else x["kappa"]
        avg = "-" if x["avg"] is None else x["avg"]
        out.append(f"{x['id']} | {x['name']} = ({x['type'][0]},{x['type'][1]}) | {' '.join(x['faces'])} | {kap} | {avg}")
    if "kappa_L" in r:
        if r["lane_hypothesis"]:
            out.append(f"kappa_L = {r['kappa_L']}: {'<= -1' if r['lane_verdict'] else 'VIOLATES <= -1'}")
        else:
            out.append(f"kappa_L = {r['kappa_L']}; verdict withheld ({r['lane_hypothesis_detail']})")
    return out


# ---------------------------------------------------------------- commands

def _emit(args, payload, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=1, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def cmd_classify(args) -> int:
    c = classify(args.n, args.m, args.k)
    _emit(args, c.to_dict(), [f"{derive(args.n, args.m, args.k).name()} = {c.name}: {describe(c)}",
                              render_line(c)])
    return EXIT_OK


def cmd_table(args) -> int:
    ns = parse_range(args.n)
    rows = table_report(ns)
    lines = []
    for n in ns:
        lines.append(f"# n = {n}")
        lines += [r.line() for r in rows if r.n == n]
    _emit(args, [r.to_dict() for r in rows], lines)
    if args.figure:
        from .plotting import verdict_map
        verdict_map(ns, args.figure)
        log.info("wrote %s", args.figure)
    return EXIT_OK


def cmd_t5(args) -> int:
    derive(args.n, args.m, args.k)
    t = is_T5(args.n, args.m, args.k)
    g = girth(fib_star_graph(args.n, args.m, args.k))
    payload = {"T5": t, "girth": None if g == float("inf") else g}
    _emit(args, payload, [f"T(5): {'yes' if t else 'no'} (star graph girth {g})"])
    return EXIT_OK


def cmd_t6(args) -> int:
    derive(args.n, args.m, args.k)
    prof = t6_profile(args.n, args.m, args.k)
    gen = is_T6_generic(args.n, args.m, args.k)
    g = girth(fib_star_graph(args.n, args.m, args.k))
    payload = {"T6": prof, "generic": gen, "girth": None if g == float("inf") else g}
    _emit(args, payload, [f"T(6): {'yes' if prof else 'no'} (star graph girth {g}); "
                          f"generic T(6) test: {'yes' if gen else 'no'}"])
    return EXIT_OK


def cmd_star(args) -> int:
    n, m, k = args.n, args.m, args.k
    derive(n, m, k)
    if args.what == "girth":
        g = girth(fib_star_graph(n, m, k))
        _emit(args, {"girth": None if g == float("inf") else g}, [f"girth {g}"])
    elif args.what == "cycles":
        cyc = short_cycles(fib_star_graph(n, m, k), args.maxlen)
        _emit(args, [{"length": c.length, "type": c.type_word, "alpha": c.alpha, "beta": c.beta} for c in cyc],
              [str(c) for c in cyc])
    else:
        if args.p is None:
            raise CliError("star census needs --p")
        rep = interior_vertex_census(n, m, k, args.p)
        lines = [str(c) for c in rep.cycles]
        lines.append(f"census p={args.p}: {'pass' if rep.passed else 'FAIL'} "
                     f"({len(rep.cycles)} cycles, {len(rep.violations)} violations)")
        _emit(args, {"passed": rep.passed, "cycles": [str(c) for c in rep.cycles],
                     "violations": [str(c) for c in rep.violations]}, lines)
        if not rep.passed:
            return EXIT_INVALID
    return EXIT_OK


def cmd_ab(args) -> int:
    derive(args.n, args.m, args.k)
    inv = abelian_invariants(args.n, args.m, args.k)
    _emit(args, {"torsion": list(inv.torsion), "rank": inv.rank, "order": inv.order}, [str(inv)])
    return EXIT_OK


def cmd_order(args) -> int:
    p = derive(args.n, args.m, args.k)
    res = enumerate_cosets(CyclicPresentation(p.n, fib_word(p.n, p.m, p.k)), (), args.max_cosets, args.strategy)
    if not isinstance(res.outcome, Closed):
        raise CliError(f"coset enumeration overflowed {args.max_cosets} cosets (defined {res.defined})",
                       EXIT_LIMIT)
    _emit(args, {"order": res.outcome.order, "defined": res.defined, "coincidences": res.coincidences},
          [f"{res.outcome.order}"])
    log.info("defined %d cosets, %d coincidences", res.defined, res.coincidences)
    return EXIT_OK


def cmd_cases(args) -> int:
    reps = case_representatives(args.p)
    _emit(args, [[r.n, r.m, r.k] for r in reps], [f"{r.name()}\t{classify(r.n, r.m, r.k).family}" for r in reps])
    return EXIT_OK


def cmd_diagram(args) -> int:
    from .diagram.model import parse_and_validate
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {args.file}: {exc}") from None
    if args.action == "check":
        doc = json.loads(text) if text.strip().startswith("{") else None
        if isinstance(doc, dict) and doc.get("kind") == "colored-disk":
            from .diagram.coloring import parse_disk
            cd = parse_disk(text)
            print(f"valid colored disk ({len(cd.faces)} faces)")
        else:
            d = parse_and_validate(text)
            print(f"valid (V={len(d.vertices)} E={len(d.edges)} F={len(d.faces)})")
        return EXIT_OK
    report = audit_report(text)
    _emit(args, report, render_audit(report))
    if args.figure:
        from .diagram.coloring import color_faces, parse_disk
        from .diagram.lanes import lane_decomposition
        from .plotting import save_disk_figure
        cd = parse_disk(text) if report["kind"] == "colored-disk" else color_faces(parse_and_validate(text))
        save_disk_figure(cd, lane_decomposition(cd), args.figure, title=args.file)
        log.info("wrote %s", args.figure)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fibtype", description="Groups of Fibonacci type G_n(m,k).")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def nmk(p):
        p.add_argument("n", type=int)
        p.add_argument("m", type=int)
        p.add_argument("k", type=int)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="classify G_n(m,k)")
    nmk(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="small-n table rows or congruence families")
    p.add_argument("--n", required=True, help="N or LO..HI")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", metavar="PATH", help="write a verdict map")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("t5", help="T(5) congruence test with the star-graph girth")
    nmk(p)
    p.set_defaults(func=cmd_t5)

    p = sub.add_parser("t6", help="T(6) congruence tests with the star-graph girth")
    nmk(p)
    p.set_defaults(func=cmd_t6)

    p = sub.add_parser("star", help="star graph girth, short cycles or interior-vertex census")
    p.add_argument("what", choices=["girth", "cycles", "census"])
    nmk(p)
    p.add_argument("--maxlen", type=int, default=7)
    p.add_argument("--p", type=int)
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("ab", help="abelianisation invariants")
    nmk(p)
    p.set_defaults(func=cmd_ab)

    p = sub.add_parser("order", help="group order by coset enumeration")
    nmk(p)
    p.add_argument("--max-cosets", type=int, default=10**6)
    p.add_argument("--strategy", choices=["felsch", "hlt"], default="felsch")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("cases", help="case representatives for additive order p")
    p.add_argument("p", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cases)

    p = sub.add_parser("diagram", help="validate or audit a van Kampen diagram or colored disk")
    p.add_argument("action", choices=["check", "audit"])
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", metavar="PATH", help="draw the coloured faces and lanes")
    p.set_defaults(func=cmd_diagram)
    return ap


def main(argv: list[str] | None = None) -> int:
    from .diagram.lanes import StructuralError
    from .diagram.model import DiagramError

    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ParameterError, TableError, DiagramError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
