"""Command-line front end.

Exit codes: 0 success, 1 ledger mismatch, 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import covers, genera, homenum, prym
from .genera import RamificationProfile
from .ledger import run_ledger
from .permgroup import FiniteGroup, alternating, cyclic, dihedral, symmetric

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_group(spec: str) -> FiniteGroup:
    """``S3``, ``A4``, ``D6``, ``Z5`` or ``Sn:4``."""
    m = re.fullmatch(r"Sn:(\d+)|([SADZ])(\d+)", spec.strip())
    if not m:
        raise UsageError(f"unknown group {spec!r}; use S<d>, A<d>, D<n>, Z<n> or Sn:<d>")
    if m.group(1):
        return symmetric(int(m.group(1)))
    kind, n = m.group(2), int(m.group(3))
    if n < 1:
        raise UsageError("group parameter must be positive")
    return {"S": symmetric, "A": alternating, "D": dihedral, "Z": cyclic}[kind](n)


def dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def cmd_count(args) -> int:
    G = parse_group(args.group)
    try:
        homs = homenum.enumerate_homs(args.genus, G, limit=args.limit)
    except homenum.EnumerationTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    surj = [h for h in homs if homenum.is_surjective(h)]
    out = {
        "group": G.name,
        "order": G.order,
        "genus": args.genus,
        "total": len(homs),
        "surjective": len(surj),
        "classes": len(homenum.classes_up_to_conjugacy(surj)),
        "histogram": None,
    }
    if G.permutations is not None and G.name.startswith("S") and G.perm(0).degree >= 2:
        out["histogram"] = {str(k): v for k, v in homenum.transposition_histogram(surj, args.genus).items()}
    if args.list_classes:
        out["class_list"] = [
            {"images": c.representative.labels(), "size": c.size}
            for c in homenum.classes_up_to_conjugacy(surj)
        ]
    print(dump(out))
    return EXIT_OK


def analyze_rep(c: covers.CoveringRep) -> dict:
    out: dict = {
        "degree": c.degree,
        "base_genus": c.genus,
        "etale": c.is_etale(),
        "components": [list(o) for o in c.components()],
        "connected": c.is_connected(),
        "monodromy_order": covers.monodromy_group(c).order,
        "cycle_types": covers.cycle_types(c),
    }
    if not c.is_connected():
        return out
    out["genus"] = genera.genus_from_monodromy(c)
    out["galois"] = covers.is_galois(c)
    disc = covers.discriminant_rep(c)
    out["discriminant_connected"] = disc.is_connected()
    if disc.is_connected():
        out["discriminant_genus"] = genera.genus_from_monodromy(disc)
    closure = covers.galois_closure(c)
    out["closure"] = {"degree": closure.degree, "genus": genera.genus_from_monodromy(closure.action)}
    if c.degree == 3:
        r = genera.ramification_profile(c)
        out["cyclic"] = covers.is_cyclic_triple_cover(c)
        out["profile"] = {"s": r.s, "t": r.t}
    return out


def cmd_analyze(args) -> int:
    text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    try:
        c = covers.CoveringRep.from_json(text)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed covering JSON: {exc}") from exc
    print(dump(analyze_rep(c)))
    return EXIT_OK


def dedupe_by_conjugation(tuples: list[genera.TowerTuple]) -> list[genera.TowerTuple]:
    """Keep the lexicographically least tuple of each simultaneous-conjugacy class."""
    G = genera.D6
    seen, out = set(), []
    for t in tuples:
        if t.branches in seen:
            continue
        orbit = {tuple(G.conj(g, a) for a in t.branches) for g in G.elements()}
        seen |= orbit
        out.append(t)
    return out


def cmd_tower(args) -> int:
    tuples = genera.find_tower_monodromy()
    report = genera.tower_report(tuples[0].branches)
    if args.dot:
        sys.stdout.write(genera.tower_dot(genera.tower_graph(report.branches)))
        return EXIT_OK
    out = report.to_json()
    if args.dedupe:
        tuples = dedupe_by_conjugation(tuples)
    out["tuple_count"] = len(tuples)
    if args.all_tuples:
        out["tuples"] = [
            {"monodromy": t.labels(), "ids": list(t.branches), "central_count": t.central_count} for t in tuples
        ]
    print(dump(out))
    return EXIT_OK


def _parse_part(text: str) -> tuple[int, int | None]:
    m = re.fullmatch(r"(\d+):(\d+|\?)", text)
    if not m:
        raise UsageError(f"bad part {text!r}; use ORDER:GENUS or ORDER:?")
    return int(m.group(1)), None if m.group(2) == "?" else int(m.group(2))


def cmd_accola(args) -> int:
    if args.tower:
        tup = genera.find_tower_monodromy()[0].branches
        print(dump(genera.tower_accola_residuals(tup)))
        return EXIT_OK
    if args.p is None or args.n0 is None or not args.part:
        raise UsageError("accola needs --p, --n0 and at least one --part (or --tower)")
    parts = [_parse_part(x) for x in args.part]
    p0 = None if args.p0 == "?" else int(args.p0)
    if p0 is None or any(g is None for _, g in parts):
        solved = genera.accola_solve(args.p, args.n0, p0, parts)
        print(dump({"solved_genus": solved}))
        return EXIT_OK
    print(dump({"residual": genera.accola_check(args.p, args.n0, p0, parts)}))
    return EXIT_OK


def cmd_prym_type(args) -> int:
    r = RamificationProfile(args.s, args.t)
    t = prym.prym_type(args.genus, r)
    print(
        dump(
            {
                "dimension": prym.prym_dimension(args.genus, r),
                "type": str(t),
                "principal_multiple": prym.is_principal_multiple(t),
            }
        )
    )
    return EXIT_OK


def cmd_prym_fiber(args) -> int:
    labels = args.labels or prym.default_labels()
    parts = prym.prym_map_fiber(labels)
    print(dump({"count": len(parts), "partitions": [[list(a), list(b)] for a, b in parts]}))
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.grid:
        principal, impossible = prym.principal_grid(args.max_genus, args.max_s, args.max_t)
        print(dump({"principal": [list(x) for x in principal], "no_noncyclic_cover": [list(x) for x in impossible]}))
        return EXIT_OK
    if args.genus is None:
        raise UsageError("classify needs --genus (or --grid)")
    verdict = prym.classify_ppp(args.genus, RamificationProfile(args.s, args.t))
    print(dump({"genus": args.genus, "s": args.s, "t": args.t, "verdict": verdict}))
    return EXIT_OK


def render_table(rows: list[dict]) -> str:
    width = max(len(r["claim"]) for r in rows) if rows else 5
    lines = []
    for r in rows:
        line = f"{r['claim']:<{width}}  {r['status']:<8}  {json.dumps(r['computed'], ensure_ascii=False)}"
        if r["status"] != "match":
            line += f"  (expected {json.dumps(r['expected'], ensure_ascii=False)})"
        lines.append(line)
    return "\n".join(lines)


def cmd_ledger(args) -> int:
    rows = [e.to_json() for e in run_ledger(args.only)]
    if not rows:
        raise UsageError(f"no claim matches {args.only!r}")
    print(dump(rows) if args.json else render_table(rows))
    return EXIT_MISMATCH if any(r["status"] != "match" for r in rows) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prymcov", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count homs from a closed surface group")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--limit", type=int, default=homenum.MAX_TUPLES)
    p.add_argument("--list-classes", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("analyze", help="analyze a covering given as JSON")
    p.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("tower", help="genera of the D6 tower")
    p.add_argument("--all-tuples", action="store_true")
    p.add_argument("--dedupe", action="store_true", help="one tuple per simultaneous-conjugacy class")
    p.add_argument("--dot", action="store_true", help="print the quotient diagram as Graphviz DOT")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("accola", help="check or solve an Accola genus identity")
    p.add_argument("--p", type=int)
    p.add_argument("--n0", type=int)
    p.add_argument("--p0", default="0", help="genus of the full quotient, or ?")
    p.add_argument("--part", action="append", default=[], help="ORDER:GENUS (GENUS may be ?)")
    p.add_argument("--tower", action="store_true", help="both identities on the D6 tower")
    p.set_defaults(func=cmd_accola)

    for name, func in (("prym-type", cmd_prym_type), ("classify", cmd_classify)):
        p = sub.add_parser(name)
        p.add_argument("--genus", type=int, required=name == "prym-type")
        p.add_argument("--s", type=int, default=0)
        p.add_argument("--t", type=int, default=0)
        if name == "classify":
            p.add_argument("--grid", action="store_true")
            p.add_argument("--max-genus", type=int, default=5)
            p.add_argument("--max-s", type=int, default=8)
            p.add_argument("--max-t", type=int, default=4)
        p.set_defaults(func=func)

    p = sub.add_parser("prym-fiber", help="partitions in the Prym map fibre")
    p.add_argument("labels", nargs="*")
    p.set_defaults(func=cmd_prym_fiber)

    p = sub.add_parser("ledger", help="recompute every reference quantity")
    p.add_argument("--only", help="claim id prefix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ledger)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
