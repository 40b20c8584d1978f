"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 two computation routes disagree,
4 a verified property fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .alexander import pd_determinant, pd_direct, pd_inclusion_exclusion
from .bijection import lemma_checks, setup, verify_weight_relation
from .errors import InconsistencyError, InputError, InvariantViolation
from .formats import load_bipartite, load_digraph
from .graphs import as_eulerian, transpose
from .links import build_link, crowell_polynomial, kauffman_polynomial, kauffman_states
from .polynomials import (
    IntPoly,
    canonical,
    is_log_concave_no_internal_zeros,
    is_palindromic,
    is_trapezoidal,
)
from .rootpolytope import normalized_volume, polytope_expansion
from .scanner import PREDICATES, ScanConfig, scan
from .trees import arborescences, best_count, ck_vector, count_eulerian_tours

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT, EXIT_VIOLATION = 0, 2, 3, 4
BEST_TOUR_LIMIT = 200_000
EXPANSION_MAX_VERTICES = 6
EXPANSION_MAX_EDGES = 12


def _coeffs(p: IntPoly) -> str:
    return " ".join(map(str, p.coeffs)) if p.coeffs else "0"


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _load_eulerian(path):
    d, _ = load_digraph(path)
    return as_eulerian(d)


# ---------------------------------------------------------------------------


def cmd_poly(args) -> int:
    d = _load_eulerian(args.path)
    methods = {
        "det": lambda: pd_determinant(d),
        "direct": lambda: pd_direct(d, 0),
        "incl-excl": lambda: pd_inclusion_exclusion(d, 0),
    }
    if args.method == "all":
        results = {name: fn() for name, fn in methods.items()}
        distinct = set(results.values())
        if len(distinct) != 1:
            detail = ", ".join(f"{k}={_coeffs(v)}" for k, v in results.items())
            raise InconsistencyError(f"pipelines disagree: {detail}")
        p = results["det"]
    else:
        p = methods[args.method]()
    if args.json:
        _emit(
            {
                "coeffs": list(p.coeffs),
                "ck_vector": ck_vector(d, 0),
                "method": args.method,
                "palindromic": is_palindromic(p),
                "log_concave": is_log_concave_no_internal_zeros(p),
                "trapezoidal": is_trapezoidal(p),
            }
        )
    else:
        print(_coeffs(p))
        print(f"P(t) = {p}")
    return EXIT_OK


def _verify_checks(d) -> list[dict]:
    n, m = d.vertex_count, len(d.edges)
    p = pd_determinant(d)
    checks = []

    def add(name, status, detail=""):
        checks.append({"name": name, "status": status, "detail": detail})

    direct = pd_direct(d, 0)
    add("determinant_vs_trees", "pass" if direct == p else "fail", f"det={_coeffs(p)} trees={_coeffs(direct)}")

    vectors = {r: ck_vector(d, r) for r in range(n)}
    same = all(v == vectors[0] for v in vectors.values())
    add("root_independence", "pass" if same else "fail", f"{n} roots")
    add("palindromic", "pass" if is_palindromic(p) else "fail", _coeffs(p))
    pt = pd_determinant(transpose(d))
    add("transpose_symmetry", "pass" if pt == p else "fail", f"transpose={_coeffs(pt)}")

    bad, counted, skipped = [], 0, 0
    for e in d.edges:
        expected = best_count(d, e.init)
        if expected > BEST_TOUR_LIMIT:
            skipped += 1
            continue
        got = count_eulerian_tours(d, e.id)
        counted += 1
        if got != expected:
            bad.append(f"edge {e.id}: {got} tours, formula {expected}")
    if bad:
        add("best_tour_count", "fail", "; ".join(bad))
    elif counted:
        add("best_tour_count", "pass", f"{counted} start edges" + (f", {skipped} skipped" if skipped else ""))
    else:
        add("best_tour_count", "skipped", f"tour counts exceed {BEST_TOUR_LIMIT}")

    small = n <= EXPANSION_MAX_VERTICES and m <= EXPANSION_MAX_EDGES
    if small:
        ie = pd_inclusion_exclusion(d, 0)
        add("inclusion_exclusion", "pass" if ie == p else "fail", _coeffs(ie))
        vol = normalized_volume(d, 0)
        add("normalized_volume", "pass" if vol == p[0] else "fail", f"volume={vol} c0={p[0]}")
        rhs = polytope_expansion(d, 0)
        add("root_polytope_expansion", "pass" if rhs == p else "fail", _coeffs(rhs))
    else:
        for name in ("inclusion_exclusion", "normalized_volume", "root_polytope_expansion"):
            add(name, "skipped", f"larger than {EXPANSION_MAX_VERTICES} vertices / {EXPANSION_MAX_EDGES} edges")
    lc = is_log_concave_no_internal_zeros(p)
    add("log_concave", "pass" if lc else "fail", _coeffs(p))
    return checks


def cmd_verify(args) -> int:
    d = _load_eulerian(args.path)
    checks = _verify_checks(d)
    ok = all(c["status"] != "fail" for c in checks)
    if args.json:
        _emit({"coeffs": list(pd_determinant(d).coeffs), "checks": checks, "ok": ok})
    else:
        for c in checks:
            print(f"{c['status'].upper():8s}{c['name']}: {c['detail']}")
        print("result: " + ("PASS" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_states(args) -> int:
    g = load_bipartite(args.path)
    link = build_link(g)
    s = setup(link)
    states = kauffman_states(link)
    arbs = arborescences(s.crowell.digraph, s.v)
    kp = kauffman_polynomial(link)
    cp = crowell_polynomial(s.crowell, s.v)
    pp = canonical(pd_determinant(link.dual.digraph))
    equal = kp == cp == pp
    if args.json:
        _emit(
            {
                "crossings": len(link.crossings),
                "regions": len(link.regions),
                "states": len(states),
                "arborescences": len(arbs),
                "kauffman": list(kp.coeffs),
                "crowell": list(cp.coeffs),
                "pd": list(pp.coeffs),
                "equal": equal,
            }
        )
    else:
        print(f"link: {len(link.crossings)} crossings, {len(link.regions)} regions")
        print(f"kauffman: {len(states)} states, {_coeffs(kp)}  ({kp})")
        print(f"crowell:  {len(arbs)} arborescences from crossing {s.v}, {_coeffs(cp)}  ({cp})")
        print(f"pd(dual): {_coeffs(pp)}  ({pp})")
        print("verdict: " + ("EQUAL" if equal else "DIFFERENT"))
    if not equal:
        raise InconsistencyError("state models disagree with the dual dimap polynomial")
    return EXIT_OK


def cmd_bijection(args) -> int:
    g = load_bipartite(args.path)
    s = setup(build_link(g))
    rep = verify_weight_relation(s)
    lem = lemma_checks(s)
    ok = rep.ok and lem.ok
    rows = [
        {
            "tree": list(r.tree),
            "k": r.k,
            "kauffman_weight": list(r.kauffman.coeffs),
            "arborescence": list(r.arborescence),
            "crowell_weight": list(r.crowell.coeffs),
            "ok": r.ok,
        }
        for r in rep.rows
    ]
    lemmas = {name: {"checked": lem.checked[name], "failures": len(lem.failures[name])} for name in lem.checked}
    if args.json:
        _emit(
            {
                "root_face": s.root_face,
                "e0": s.e0,
                "v": s.v,
                "f_v": s.f_v,
                "m2": rep.m2,
                "rows": rows,
                "injective": rep.injective,
                "surjective": rep.surjective,
                "lemmas": lemmas,
                "ok": ok,
            }
        )
    else:
        print(f"exterior dual vertex r={s.root_face}, e0={s.e0}, root crossing v={s.v}, f_v={s.f_v}, m2={rep.m2}")
        print(f"{'tree':<18}{'k':>3}  {'wt_K':<8}{'arborescence':<22}{'wt_C':<10}ok")
        for r in rep.rows:
            tree = ",".join(map(str, r.tree))
            arb = ",".join(map(str, r.arborescence))
            print(f"{tree:<18}{r.k:>3}  {str(r.kauffman):<8}{arb:<22}{str(r.crowell):<10}{'yes' if r.ok else 'NO'}")
        print(f"bijective: {rep.injective and rep.surjective}  weight relation: {not rep.violations}")
        for name, v in lemmas.items():
            print(f"lemma {name}: {v['checked'] - v['failures']}/{v['checked']}")
        print("result: " + ("PASS" if ok else "FAIL"))
    return EXIT_OK if ok else EXIT_VIOLATION


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO:HI, got {text!r}") from None


def cmd_scan(args) -> int:
    cfg = ScanConfig(
        vertices=args.n,
        edges=args.m,
        count=args.count,
        seed=args.seed,
        checks=tuple(c for c in args.checks.split(",") if c),
        jobs=args.jobs,
        exhaustive=args.exhaustive,
        symmetric=args.symmetric,
        cross_check_every=args.cross_check_every,
    )
    rep = scan(cfg, args.artifacts)
    sys.stdout.write(rep.to_json() if args.json else rep.to_text())
    if rep.inconsistencies:
        return EXIT_INCONSISTENT
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="eulerian-alexander",
        description="Alexander-type polynomials of Eulerian digraphs and special alternating links.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print the polynomial of a digraph file")
    p.add_argument("path")
    p.add_argument("--method", choices=("det", "direct", "incl-excl", "all"), default="det")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="run the identity suite on a digraph file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("states", help="Kauffman and Crowell models of a bipartite file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("bijection", help="tree-to-arborescence table of a bipartite file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("scan", help="check coefficient properties over many digraphs")
    p.add_argument("--n", type=_range, default=(1, 7), help="vertex count N or range LO:HI")
    p.add_argument("--m", type=_range, default=(0, 14), help="edge count N or range LO:HI")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", default=",".join(PREDICATES))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--exhaustive", action="store_true", help="use every isomorphism class up to the upper bounds")
    p.add_argument("--symmetric", action="store_true", help="only digraphs with symmetric multiplicities")
    p.add_argument("--cross-check-every", type=int, default=10)
    p.add_argument("--artifacts", default=None, help="directory for replayable violation files")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except InvariantViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
