"""Command-line front end.

Subcommands: family, bounds, classify, census, search, verify-octal,
reproduce.  Exit codes: 0 success, 1 verification mismatch, 2 usage.
The database directory comes from --db, overridden by LCDLAB_DB.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import bounds, families, formats, tables
from .classify import classify, classify_by_columns, lcd_census
from .gf2 import BitMatrix
from .search import SearchBudget, search_lcd


def _db_dir(args) -> str | None:
    return os.environ.get("LCDLAB_DB") or args.db


def _emit(args, report: dict):
    if getattr(args, "json", False):
        print(formats.to_json(report))
    else:
        for key, val in report.items():
            print(f"{key}: {json.dumps(val, sort_keys=True)}")


def _write_manifest(db_dir: str | None, command: str, params: dict,
                    seed, started: float, digest_src: str):
    if not db_dir:
        return
    os.makedirs(db_dir, exist_ok=True)
    manifest = {
        "command": command,
        "parameters": params,
        "seed": seed,
        "started": started,
        "finished": time.time(),
        "digest": hashlib.sha256(digest_src.encode()).hexdigest(),
    }
    path = os.path.join(db_dir, f"manifest-{command}.json")
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)


def cmd_family(args) -> int:
    verdict = families.family_code(args.k, args.s, args.t)
    av = families.family_affine_vector(args.k, args.s)
    report = formats.code_report(
        verdict.code,
        claimed={"n": verdict.claimed_n, "d": verdict.claimed_d, "is_lcd": True},
        params={"k": args.k, "s": args.s, "t": args.t})
    if args.emit in ("we", "all"):
        swe = families.symbolic_weight_enumerator(args.k, av)
        report["symbolic_weight_enumerator"] = [
            {"multiplicity": m, "exponent": str(e)} for m, e in swe.terms]
    if args.emit in ("det", "all"):
        report["gram_det_coefficients"] = list(
            families.symbolic_gram_det(args.k, av))
    if args.emit in ("code", "all"):
        code = verdict.code
        report["generator_rows"] = [
            "".join(str(code.generator.get(i, j)) for j in range(code.n))
            for i in range(code.k)]
        block = BitMatrix(code.k, code.n - code.k,
                          tuple(r >> code.k for r in code.generator.data))
        report["octal"] = formats.encode_octal(block)
    _emit(args, report)
    return 0 if report["match"] else 1


def cmd_bounds(args) -> int:
    entry = bounds.known_lcd_d(args.n, args.k)
    closed = (bounds.closed_form_bound(args.n, args.k)
              if args.k in (4, 5) else None)
    report = formats.bounds_report(args.n, args.k, entry,
                                   bounds.griesmer_dmax(args.n, args.k), closed)
    _emit(args, report)
    return 0


def cmd_classify(args) -> int:
    started = time.time()
    db_dir = _db_dir(args)
    db = classify(args.n, args.k, args.d, db_dir=db_dir,
                  bottom_k=args.bottom_k, jobs=args.jobs)
    census = lcd_census(db)
    report = formats.census_report(census)
    report["method"] = db.method
    _emit(args, report)
    _write_manifest(db_dir, "classify",
                    {"n": args.n, "k": args.k, "d": args.d}, None, started,
                    formats.codedb_dumps(db))
    return 0


def cmd_census(args) -> int:
    db_dir = _db_dir(args)
    if db_dir:
        path = os.path.join(db_dir, f"n{args.n}k{args.k}d{args.d}.codedb")
        if os.path.exists(path):
            db = formats.load_codedb(path)
        else:
            db = classify(args.n, args.k, args.d, db_dir=db_dir, jobs=args.jobs)
    else:
        db = classify(args.n, args.k, args.d, jobs=args.jobs)
    _emit(args, formats.census_report(lcd_census(db)))
    return 0


def cmd_search(args) -> int:
    budget = SearchBudget(max_iterations=args.iters, rng_seed=args.seed,
                          restarts=args.restarts)
    started = time.time()
    code = search_lcd(args.n, args.k, args.d, budget)
    if code is None:
        _emit(args, {"params": {"n": args.n, "k": args.k, "d": args.d},
                     "found": False})
        return 1
    report = formats.code_report(code, claimed={"is_lcd": True},
                                 params={"n": args.n, "k": args.k, "d": args.d})
    report["found"] = True
    _emit(args, report)
    _write_manifest(_db_dir(args), "search",
                    {"n": args.n, "k": args.k, "d": args.d}, args.seed,
                    started, str(code.generator.data))
    return 0


def _verify_octal_table(groups, k: int, expect_lcd: bool, out: list[str]) -> bool:
    ok = True
    for (n, d), strings in groups:
        for idx, s in enumerate(strings, start=1):
            code = formats.code_from_octal(s, n, k)
            good = (code.n == n and code.k == k and code.min_weight() == d
                    and code.is_lcd() == expect_lcd
                    and formats.encode_octal(formats.decode_octal(s, n, k)) == s)
            ok &= good
            out.append(f"{'PASS' if good else 'FAIL'} [{n},{k},{d}] #{idx}")
    return ok


def cmd_verify_octal(args) -> int:
    out: list[str] = []
    ok = True
    if args.table in ("dim4", "all"):
        ok &= _verify_octal_table(tables.DIM4_GENERATORS, 4, False, out)
    if args.table in ("dim5", "all"):
        ok &= _verify_octal_table(tables.DIM5_GENERATORS, 5, False, out)
    if args.table in ("m-table", "all"):
        for n, (d, rows) in sorted(tables.DIM5_LCD_WITNESSES.items()):
            code = formats.systematic_code(formats.parse_binary_rows(rows, 5))
            good = (code.n == n and code.min_weight() == d and code.is_lcd())
            ok &= good
            out.append(f"{'PASS' if good else 'FAIL'} lcd witness [{n},5,{d}]")
    print("\n".join(out))
    return 0 if ok else 1


def _reproduce_checks(suite: str, full: bool, db_dir: str | None, jobs: int):
    if suite in ("dim4", "all"):
        yield ("families dim4 (t<=4)", lambda: all(
            families.family_code(4, s, t).match
            for s in range(15)
            for t in range(families.family_t_min(4, s), 5)))
        yield ("weight enumerators dim4", lambda: all(
            families.symbolic_weight_enumerator(
                4, families.family_affine_vector(4, s))
            == families.expected_symbolic_we(4, s) for s in range(15)))
        yield ("gram determinants dim4", lambda: all(
            families.symbolic_gram_det(4, families.family_affine_vector(4, s))
            == tables.DIM4_DET[s]
            and families.det_is_odd_everywhere(tables.DIM4_DET[s])
            for s in range(15)))
        yield ("generator fixtures dim4", lambda: _verify_octal_table(
            tables.DIM4_GENERATORS, 4, False, []))
        yield ("counts dim4 (k<=3)", lambda: all(
            classify_by_columns(n - 1, 3, d + j).count == v
            for (n, d), row in tables.DIM4_COUNTS.items()
            for j, v in enumerate(row["k3"])) and all(
            classify_by_columns(n - 2, 2, d + j).count == v
            for (n, d), row in tables.DIM4_COUNTS.items()
            for j, v in enumerate(row["k2"])))
    if suite in ("dim5", "all"):
        yield ("families dim5 (t<=3)", lambda: all(
            families.family_code(5, s, t).match
            for s in range(31)
            for t in range(families.family_t_min(5, s), 4)))
        yield ("weight enumerators dim5", lambda: all(
            families.symbolic_weight_enumerator(
                5, families.family_affine_vector(5, s))
            == families.expected_symbolic_we(5, s) for s in range(31)))
        yield ("gram determinants dim5", lambda: all(
            families.symbolic_gram_det(5, families.family_affine_vector(5, s))
            == tables.DIM5_DET[s]
            and families.det_is_odd_everywhere(tables.DIM5_DET[s])
            for s in range(31)))
        yield ("generator fixtures dim5", lambda: _verify_octal_table(
            tables.DIM5_GENERATORS, 5, False, []))
        yield ("lcd witnesses dim5", lambda: all(
            (lambda c: c.n == n and c.min_weight() == d and c.is_lcd())(
                formats.systematic_code(formats.parse_binary_rows(rows, 5)))
            for n, (d, rows) in tables.DIM5_LCD_WITNESSES.items()))
        yield ("counts dim5 (k<=3)", lambda: all(
            classify_by_columns(n - 2, 3, d + j).count == v
            for (n, d), row in tables.DIM5_COUNTS.items()
            for j, v in enumerate(row["k3"])) and all(
            classify_by_columns(n - 3, 2, d + j).count == v
            for (n, d), row in tables.DIM5_COUNTS.items()
            for j, v in enumerate(row["k2"])))
    if suite in ("bounds", "all"):
        yield ("griesmer case formulas", lambda: all(
            bounds.closed_form_bound(n, k) == bounds.griesmer_dmax(n, k)
            for k in (4, 5) for n in range(k, k + 466)))
        yield ("largest-minimum-weight ledger", lambda: all(
            bounds.known_lcd_d(n, k).exact == v
            for (n, k), v in tables.KNOWN_LCD_D.items()))
    if full and suite in ("dim4", "all"):
        yield ("classification [22,4,11]", lambda: _census_is(
            22, 4, 11, 2, 0, db_dir, jobs))
        yield ("classification [23,4,12]", lambda: _census_is(
            23, 4, 12, 1, 0, db_dir, jobs))
        yield ("classification [27,4,14]", lambda: _census_is(
            27, 4, 14, 1, 0, db_dir, jobs))
    if full and suite in ("dim5", "all"):
        yield ("classification [25,5,12]", lambda: _census_is(
            25, 5, 12, 8, 0, db_dir, jobs))


def _census_is(n, k, d, want_n, want_lcd, db_dir, jobs) -> bool:
    census = lcd_census(classify(n, k, d, db_dir=db_dir, jobs=jobs))
    return census.count == want_n and census.lcd_count == want_lcd


def cmd_reproduce(args) -> int:
    started = time.time()
    db_dir = _db_dir(args)
    all_ok = True
    results = []
    for name, check in _reproduce_checks(args.suite, args.full, db_dir,
                                         args.jobs):
        t0 = time.time()
        try:
            ok = bool(check())
        except Exception as exc:  # a crash is a failure, not an abort
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        all_ok &= ok
        results.append(f"{'PASS' if ok else 'FAIL'}  {name}")
        print(f"{results[-1]}  [{time.time() - t0:.1f}s]", flush=True)
    _write_manifest(db_dir, "reproduce", {"suite": args.suite,
                                          "full": args.full}, None, started,
                    "\n".join(results))
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lcdlab",
        description="Binary LCD codes: families, bounds, search, classification")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, db=True):
        p.add_argument("--json", action="store_true", help="machine output")
        if db:
            p.add_argument("--db", default=None,
                           help="database directory (env LCDLAB_DB overrides)")
            p.add_argument("--jobs", type=int, default=1,
                           help="parallel workers for classification")

    p = sub.add_parser("family", help="build and verify a family member")
    p.add_argument("--k", type=int, required=True, choices=(4, 5))
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--emit", choices=("we", "det", "code", "all"), default="all")
    common(p, db=False)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("bounds", help="bound and known-value report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p, db=False)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("classify", help="classify [n,k,d] codes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--bottom-k", type=int, default=3, dest="bottom_k",
                   help="largest dimension enumerated directly")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="LCD census of a classification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("search", help="heuristic LCD witness search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iters", type=int, default=1_000_000)
    p.add_argument("--restarts", type=int, default=64)
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-octal", help="verify fixture generator tables")
    p.add_argument("--table", choices=("dim4", "dim5", "m-table", "all"),
                   default="all")
    p.add_argument("--all", action="store_true",
                   help="accepted for symmetry; tables verify in full")
    common(p, db=False)
    p.set_defaults(func=cmd_verify_octal)

    p = sub.add_parser("reproduce", help="run the verification matrix")
    p.add_argument("--suite", choices=("dim4", "dim5", "bounds", "all"),
                   default="all")
    p.add_argument("--full", action="store_true",
                   help="include the desk-scale classifications")
    common(p)
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
