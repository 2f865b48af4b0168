"""Command-line front end: verification suites, batch classification,
and structure-table dumps with deterministic output."""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .scalars import PolyRing


def _report(check: str, ok: bool, counts: dict, details, t0: float) -> dict:
    return {
        "check": check,
        "status": "pass" if ok else "fail",
        "counts": counts,
        "details": [str(d) for d in details][:10],
        "ms": int((time.time() - t0) * 1000),
    }


def _params(args):
    if args.symbolic or (args.a1 is None and args.a2 is None):
        R = PolyRing("a1", "a2")
        a1, a2 = R.gens()
        return a1, a2, "symbolic"
    a1 = Fraction(args.a1 if args.a1 is not None else 0)
    a2 = Fraction(args.a2 if args.a2 is not None else 0)
    return a1, a2, f"({a1},{a2})"


def _suite_nichols(args) -> list:
    from .rewrite import default_rules, hilbert_series, irreducible_words
    t0 = time.time()
    rules = default_rules(0, 0, fuel=args.fuel)
    words = irreducible_words(rules)
    profile = hilbert_series(words)
    ok = len(words) == 12 and profile == [1, 3, 4, 3, 1]
    return [_report("nichols.basis", ok,
                    {"words": len(words), "profile": profile,
                     "dim_with_tails": len(words) * 6},
                    [] if ok else [profile], t0)]


def _suite_diamond(args) -> list:
    from .rewrite import (check_associativity, default_rules,
                          irreducible_words, overlap_ambiguities,
                          resolve_ambiguity, structure_constants)
    a1, a2, label = _params(args)
    out = []
    t0 = time.time()
    rules = default_rules(a1, a2, fuel=args.fuel)
    ambs = overlap_ambiguities(rules)
    unresolved = [a for a in ambs if not resolve_ambiguity(a, rules)[0]]
    out.append(_report("diamond.ambiguities", not unresolved,
                       {"checked": len(ambs),
                        "resolved": len(ambs) - len(unresolved),
                        "params": label},
                       unresolved, t0))
    t0 = time.time()
    words = irreducible_words(rules)
    out.append(_report("diamond.basis", len(words) == 12,
                       {"words": len(words)}, [], t0))
    t0 = time.time()
    table = structure_constants(rules)
    if time.time() - t0 > args.budget_sec:
        rep = check_associativity(table, "sampled", seed=args.seed)
        note = ["budget exceeded at table build; sampled mode"]
    else:
        rep = check_associativity(table, "exhaustive")
        note = []
    out.append(_report("diamond.associativity", rep["ok"],
                       {"mode": rep["mode"], "checked": rep["checked"],
                        "params": label},
                       note + rep["failures"][:5], t0))
    return out


def _suite_hopf(args) -> list:
    from .hopf72 import (build, c_identity, coradical_certificate, gr_check,
                         verify_hopf_axioms, verify_hopf_ideal)
    a1, a2, label = _params(args)
    out = []
    t0 = time.time()
    H = build(a1, a2)
    out.append(_report("hopf.build", True, {"dim": H.dim, "params": label},
                       [], t0))
    t0 = time.time()
    rep = verify_hopf_axioms(H, "exhaustive")
    out.append(_report("hopf.axioms", rep["ok"],
                       {"basis": rep["basis_checked"],
                        "pairs": rep["pairs_checked"]},
                       rep["failures"], t0))
    t0 = time.time()
    rep = verify_hopf_ideal(a1, a2, H)
    out.append(_report("hopf.ideal", rep["ok"], {}, rep["failures"], t0))
    t0 = time.time()
    rep = c_identity(a1, a2, H)
    out.append(_report("hopf.c_identity", rep["ok"], {}, rep["failures"], t0))
    t0 = time.time()
    rep = coradical_certificate(H)
    out.append(_report("hopf.coradical", rep["ok"],
                       {"conclusion": rep["conclusion"]}, rep["failures"], t0))
    t0 = time.time()
    rep = gr_check(H)
    out.append(_report("hopf.graded", rep["ok"], {}, rep["failures"], t0))
    return out


def _suite_lemmas(args) -> list:
    from .hopf72 import adjoint_isotypics, build, lemma31_suite
    a1, a2, label = _params(args)
    out = []
    t0 = time.time()
    H = build(a1, a2)
    rep = lemma31_suite(H)
    out.append(_report("lemmas.structure", rep["ok"],
                       {"antipode_invertible": rep["antipode_invertible"],
                        "params": label},
                       rep["failures"], t0))
    t0 = time.time()
    pieces = adjoint_isotypics(H, 1)
    supp = sorted(str(p.g) for p in pieces)
    total = sum(len(p.members) for p in pieces)
    ok = total == 24 and supp == ["(12)", "(13)", "(23)", "e"]
    out.append(_report("lemmas.isotypics", ok,
                       {"supp_F1": supp, "dim_F1": total}, [], t0))
    return out


def _suite_classify(args) -> list:
    from .classify import act, canonical_rep, orbit_eq, verify_iso
    out = []
    t0 = time.time()
    checks = [
        orbit_eq((1, 0), (1, 1)),
        not orbit_eq((1, 0), (1, 2)),
        orbit_eq((0, 0), (0, 0)),
        canonical_rep((3, 0)) == canonical_rep((0, 7)) == canonical_rep((-2, -2)),
        act((Fraction(1), Fraction(0)), (1, "(12)")) == (0, 1),
    ]
    out.append(_report("classify.orbits", all(checks),
                       {"checks": len(checks)},
                       [i for i, c in enumerate(checks) if not c], t0))
    for theta in ("(12)", "(123)"):
        t0 = time.time()
        rep = verify_iso(theta)
        out.append(_report(f"classify.iso.{theta}", rep["ok"],
                           {"orientation": rep["orientation"]},
                           rep["failures"], t0))
    return out


SUITES = {
    "nichols": _suite_nichols,
    "diamond": _suite_diamond,
    "hopf": _suite_hopf,
    "lemmas": _suite_lemmas,
    "classify": _suite_classify,
}


def cmd_verify(args) -> int:
    scopes = list(SUITES) if args.scope == "all" else [args.scope]
    reports = []
    for scope in scopes:
        reports.extend(SUITES[scope](args))
    reports.sort(key=lambda r: r["check"])
    if args.json:
        print(json.dumps(reports, indent=2))
    else:
        for r in reports:
            line = f"[{r['status'].upper():4}] {r['check']}  {r['counts']}"
            print(line)
            for d in r["details"]:
                print(f"        {d}")
    return 0 if all(r["status"] == "pass" for r in reports) else 1


def cmd_classify(args) -> int:
    from .classify import canonical_rep, format_pair, parse_pair
    try:
        with open(args.input) as fh:
            lines = [ln.strip() for ln in fh]
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    pairs = []
    for lineno, ln in enumerate(lines, 1):
        if not ln or ln.startswith("#"):
            continue
        try:
            pairs.append((lineno, parse_pair(ln)))
        except (ValueError, ZeroDivisionError) as exc:
            print(f"parse error at line {lineno}: {exc}", file=sys.stderr)
            return 2
    groups: dict = {}
    for lineno, p in pairs:
        lab = canonical_rep(p)
        print(f"line {lineno}: ({format_pair(p)}) -> orbit [{format_pair(lab)}]")
        groups.setdefault(lab, []).append(lineno)
    print(f"orbits: {len(groups)}")
    for lab in sorted(groups):
        print(f"  [{format_pair(lab)}]: lines {groups[lab]}")
    return 0


def cmd_dump(args) -> int:
    from .hopf72 import build, dump_tables
    a1, a2, label = _params(args)
    H = build(a1, a2)
    print(f"# structure tables at {label}")
    print(dump_tables(H))
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hopfs3",
        description="Exact verification of the 72-dimensional Hopf algebra "
                    "family with dual-S3 coradical")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("scope", choices=["all"] + sorted(SUITES),
                   help="which suite to run")
    v.add_argument("--a1", help="rational a1 (default: symbolic)")
    v.add_argument("--a2", help="rational a2 (default: symbolic)")
    v.add_argument("--symbolic", action="store_true",
                   help="force symbolic parameters")
    v.add_argument("--json", action="store_true", help="machine-readable output")
    v.add_argument("--seed", type=int, default=0, help="sampling seed")
    v.add_argument("--budget-sec", type=float, default=600.0,
                   dest="budget_sec", help="wall-clock budget")
    v.add_argument("--fuel", type=int, default=10 ** 6,
                   help="rewrite fuel per reduction")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="batch orbit classification")
    c.add_argument("input", help="file with one 'p/q, r/s' pair per line")
    c.set_defaults(func=cmd_classify)

    d = sub.add_parser("dump", help="dump structure tables")
    d.add_argument("--a1", help="rational a1 (default: symbolic)")
    d.add_argument("--a2", help="rational a2 (default: symbolic)")
    d.add_argument("--symbolic", action="store_true")
    d.set_defaults(func=cmd_dump)

    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if not hasattr(args, "fuel"):
        args.fuel = 10 ** 6
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
