"""Command-line surface: generating functions, verification sweeps,
cyclotomic verdicts, and descent-table dumps.

Exit codes: 0 success, 2 usage error, 3 enumeration budget exceeded,
4 verification mismatch.
"""

import argparse
import csv
import json
import sys
from collections import Counter
from itertools import groupby

from .zpoly import IntPoly, cyclotomic_factors
from .indexset import IndexSet
from .sperm import FAMILIES, label_mask
from .genfun import BudgetError, brute_quotient, brute_table, closed_poly
from .checks import CHECKS, CheckContext, TIERS, run_checks

EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4

TIER_RANK_BOUND = {"fast": 6, "full": 7, "extended": 8}  # families B and D
A_RANK_BOUND = 10


def _parse_families(text: str) -> tuple[str, ...]:
    fams = tuple(tok.strip().upper() for tok in text.split(",") if tok.strip())
    for f in fams:
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r} (choose from A, B, D)")
    if not fams:
        raise ValueError("no families selected")
    return fams


def _coeff_record(p: IntPoly) -> dict:
    return {"coeffs": list(p.coeffs)}


def cmd_genfun(args) -> int:
    I = IndexSet.from_text(args.n, args.iset)
    polys: dict[str, IntPoly] = {}
    if args.method in ("closed", "both"):
        polys["closed"] = closed_poly(args.family, args.n, I)
    if args.method in ("brute", "both"):
        polys["brute"] = brute_quotient(args.family, args.n, I)
    equal = polys["closed"] == polys["brute"] if len(polys) == 2 else None
    shown = polys.get("brute", polys.get("closed"))

    if args.format == "json":
        rec: dict = {
            "family": args.family,
            "n": args.n,
            "set": list(I.members()),
            "method": args.method,
        }
        for key in ("closed", "brute"):
            if key in polys:
                rec[key] = _coeff_record(polys[key])
        if equal is not None:
            rec["equal"] = equal
        rec["cyclotomicProduct"] = cyclotomic_factors(shown) is not None
        print(json.dumps(rec))
    elif args.method == "both":
        print(f"closed: {polys['closed']}")
        print(f"brute:  {polys['brute']}")
        print(f"equal: {'yes' if equal else 'no'}")
    else:
        print(shown)
    return EXIT_MISMATCH if equal is False else 0


def _verify_context(args) -> tuple[CheckContext, list[str] | None]:
    families = _parse_families(args.families)
    nmax = {f: TIERS[args.tier][f] for f in families}
    if args.nmax is not None:
        if args.nmax < 1:
            raise ValueError("--nmax must be positive")
        for f in families:
            bound = A_RANK_BOUND if f == "A" else TIER_RANK_BOUND[args.tier]
            capped = min(args.nmax, bound)
            if capped < args.nmax:
                print(f"note: {f} rank capped at {capped} by tier {args.tier}",
                      file=sys.stderr)
            nmax[f] = capped
    only = None
    if args.only is not None:
        only = [tok.strip() for tok in args.only.split(",") if tok.strip()]
        unknown = [name for name in only if name not in CHECKS]
        if unknown:
            raise ValueError(
                f"unknown check ids {unknown}; valid ids: {', '.join(CHECKS)}"
            )
    ctx = CheckContext(nmax=nmax, families=families, workers=args.workers)
    return ctx, only


def _write_verify(rows, fmt: str, out) -> None:
    if fmt == "json":
        records = [
            {"check": r.check, "family": r.family, "n": r.n, "set": r.set_text,
             "status": r.status, "detail": r.detail}
            for r in rows
        ]
        json.dump(records, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(["family", "n", "set", "check", "status"])
        for r in rows:
            writer.writerow([r.family, r.n, r.set_text, r.check, r.status])
    else:
        for key, group in groupby(rows, key=lambda r: (r.check, r.family, r.n)):
            batch = list(group)
            check, family, n = key
            bad = [r for r in batch if not r.ok]
            verdict = "pass" if not bad else f"FAIL ({len(bad)} of {len(batch)})"
            out.write(f"{check:24s} {family} n={n}: {verdict} ({len(batch)} rows)\n")
            for r in bad:
                out.write(f"  FAIL {{{r.set_text}}}: {r.detail}\n")


def cmd_verify(args) -> int:
    ctx, only = _verify_context(args)
    rows = list(run_checks(ctx, only))
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        _write_verify(rows, args.format, out)
    finally:
        if args.output:
            out.close()
    fails = [r for r in rows if not r.ok]
    summary = f"{len(rows)} rows, {len(fails)} failures"
    if fails:
        for r in fails:
            print(f"mismatch: {r.check} family {r.family} n={r.n} I={{{r.set_text}}}",
                  file=sys.stderr)
        print(f"verify: {summary}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"verify: {summary}", file=sys.stderr)
    return 0


def cmd_cyclo(args) -> int:
    if args.coeffs is not None:
        try:
            coeffs = [int(tok) for tok in args.coeffs.split(",")]
        except ValueError:
            raise ValueError("--coeffs expects comma-separated integers")
        p = IntPoly(coeffs)
    else:
        n, m = args.trinomial
        if not 1 <= m < n:
            raise ValueError("--trinomial expects 1 <= M < N")
        p = IntPoly([1] + [0] * (m - 1) + [2] + [0] * (n - m - 1) + [1])
    factors = cyclotomic_factors(p)

    if args.format == "json":
        print(json.dumps({
            "coeffs": list(p.coeffs),
            "cyclotomicProduct": factors is not None,
            "factors": sorted(factors) if factors is not None else None,
        }))
        return 0
    if factors is None:
        print("no")
    elif not factors:
        print("yes (empty product)")
    else:
        parts = [
            f"Phi_{k}^{mult}" if mult > 1 else f"Phi_{k}"
            for k, mult in sorted(Counter(factors).items())
        ]
        print(f"yes: {' '.join(parts)}")
    return 0


def cmd_table(args) -> int:
    table = brute_table(args.family, args.n)
    lm = label_mask(args.family, args.n)
    masks = [mask for mask in range(1 << args.n) if mask & ~lm == 0]

    def set_text(mask: int) -> str:
        return ",".join(str(i) for i in range(args.n) if mask >> i & 1)

    if args.format == "json":
        rec = {
            "family": args.family,
            "n": args.n,
            "buckets": [
                {"set": [i for i in range(args.n) if mask >> i & 1],
                 "coeffs": list(table.buckets.get(mask, IntPoly()).coeffs)}
                for mask in masks
            ],
        }
        print(json.dumps(rec))
    else:
        for mask in masks:
            poly = table.buckets.get(mask, IntPoly())
            print(f"{{{set_text(mask)}}}: {poly if not poly.is_zero else 0}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddlen",
        description="Sign-twisted odd-length generating functions over "
                    "parabolic quotients of signed permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genfun", help="print one quotient generating function")
    p.add_argument("-f", "--family", required=True, choices=FAMILIES)
    p.add_argument("-n", type=int, required=True, help="rank")
    p.add_argument("-I", dest="iset", required=True,
                   help="index set, e.g. '0,2' or '0-2,4' ('' for empty)")
    p.add_argument("-m", "--method", choices=("closed", "brute", "both"),
                   default="closed")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("verify", help="run the named identity checks")
    p.add_argument("--tier", choices=tuple(TIERS), default="fast")
    p.add_argument("--families", default="A,B,D")
    p.add_argument("--nmax", "--n", dest="nmax", type=int, default=None,
                   help="rank bound for brute sweeps (capped by the tier)")
    p.add_argument("--only", default=None,
                   help="comma-separated check ids (see --list-checks)")
    p.add_argument("--list-checks", action="store_true",
                   help="print the check ids and exit")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (ODDLEN_WORKERS overrides)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cyclo", help="decide cyclotomic-product factorability")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--coeffs", default=None,
                       help="ascending coefficients, e.g. '1,0,2,0,1'")
    group.add_argument("--trinomial", nargs=2, type=int, metavar=("N", "M"),
                       help="test x^N + 2x^M + 1")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_cyclo)

    p = sub.add_parser("table", help="dump a descent-class polynomial table")
    p.add_argument("-f", "--family", required=True, choices=FAMILIES)
    p.add_argument("-n", type=int, required=True, help="rank")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "list_checks", False):
        for name in CHECKS:
            print(name)
        return 0
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
