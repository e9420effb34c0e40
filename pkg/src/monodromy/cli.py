"""Command-line surface: every operation with machine-readable JSON output.

Single-shot commands print one RunReport object; sweep commands stream one
JSON object per row followed by a summary RunReport.  Output is
deterministic for fixed flags apart from the timing_ms field.

Exit codes: 0 = completed (a found violation is a result, not an error),
1 = suite assertion failure, 2 = usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import __version__
from .catalog import (
    THEOREMS,
    classify_binomial,
    classify_pair,
    crosscheck,
    enumerate_family,
    family_ids,
    write_catalog,
)
from .charsums import (
    MELLIN_Q_GUARD,
    build_field,
    gauss_sums_all,
    mellin_suite,
    switchsum_exhaustive,
)
from .criteria import (
    belyi_search,
    binomial_search,
    default_max_r,
    verify_witness_table,
    w_value,
)
from .qz import QzClass, kubert_v

MELLIN_QS = (4, 8, 9, 16, 25, 27, 32, 49, 64)
MELLIN_PAIRS = ((2, 2), (3, 2), (5, 3), (4, 3))
GAUSS_ABS_TOL = 1e-9
MELLIN_REL_TOL = 1e-6


def _emit(obj: dict, pretty: bool) -> None:
    if pretty:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(json.dumps(obj, sort_keys=True))


def _report(command: str, inputs: dict, result, t0: float, pretty: bool) -> None:
    _emit(
        {
            "command": command,
            "inputs": inputs,
            "result": result,
            "timing_ms": int((time.monotonic() - t0) * 1000),
            "version": __version__,
        },
        pretty,
    )


def _fraction_arg(text: str) -> QzClass:
    try:
        return QzClass.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r} ({exc})")


def cmd_v(args) -> int:
    t0 = time.monotonic()
    x = args.fraction
    try:
        v = kubert_v(args.p, x)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _report(
        "vp",
        {"p": args.p, "x": str(x)},
        {"v": str(v), "decimal": float(v)},
        t0,
        args.pretty,
    )
    return 0


def cmd_w(args) -> int:
    t0 = time.monotonic()
    try:
        w = w_value(args.p, (args.d, args.e), args.x, args.y)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _report(
        "w",
        {"p": args.p, "d": args.d, "e": args.e, "x": str(args.x), "y": str(args.y)},
        {
            "w": str(w),
            "decimal": float(w),
            "verdict": "violation" if w * 2 < 3 else "pass",
        },
        t0,
        args.pretty,
    )
    return 0


def _search_command(args, which: str) -> int:
    t0 = time.monotonic()
    searcher = belyi_search if which == "belyi" else binomial_search
    try:
        res = searcher(
            args.p,
            (args.d, args.e),
            max_r=args.max_r,
            stop_early=not args.no_early_stop,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _report(
        which,
        {"p": args.p, "d": args.d, "e": args.e, "max_r": res.max_r,
         "early_stop": not args.no_early_stop},
        res.as_dict(),
        t0,
        args.pretty,
    )
    return 0


def cmd_verify_witnesses(args) -> int:
    t0 = time.monotonic()
    rows = None
    if args.table:
        with open(args.table, encoding="utf-8") as fh:
            raw = json.load(fh)
        rows = [tuple(r[:6]) + (r[6] if len(r) > 6 else 0,) for r in raw]
    results = verify_witness_table(rows)
    for row in results:
        _emit(row, args.pretty)
    failures = sum(1 for row in results if not row["ok"])
    _report(
        "verify-witnesses",
        {"table": args.table or "builtin"},
        {"rows": len(results), "failures": failures},
        t0,
        args.pretty,
    )
    return 1 if failures else 0


def cmd_catalog(args) -> int:
    t0 = time.monotonic()
    count = 0
    try:
        fids = family_ids(args.theorem, args.p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for fid in fids:
        for pair in enumerate_family(fid, args.p, args.max):
            _emit(
                {
                    "theorem": args.theorem,
                    "item": fid.index,
                    "p": args.p,
                    "A": pair.d,
                    "B": pair.e,
                    "params": {},
                    "reversed": False,
                },
                args.pretty,
            )
            count += 1
    _report(
        "catalog",
        {"p": args.p, "max": args.max, "theorem": args.theorem},
        {"rows": count},
        t0,
        args.pretty,
    )
    return 0


def cmd_classify(args) -> int:
    t0 = time.monotonic()
    classify = classify_binomial if args.theorem == "binomial" else classify_pair
    if args.theorem == "binomial":
        cls = classify(args.p, (args.d, args.e))
    else:
        cls = classify(args.p, (args.d, args.e), args.theorem)
    _report(
        "classify",
        {"p": args.p, "d": args.d, "e": args.e, "theorem": args.theorem},
        {
            "reduced": [cls.reduced_pair.d, cls.reduced_pair.e],
            "stripped_p_power": cls.stripped_p_power,
            "memberships": [
                {
                    "item": m.family.index,
                    "params": m.params_dict(),
                    "reversed": m.reversed,
                }
                for m in cls.memberships
            ],
        },
        t0,
        args.pretty,
    )
    return 0


def cmd_crosscheck(args) -> int:
    t0 = time.monotonic()
    report = crosscheck(
        args.p,
        args.max,
        max_r=args.max_r,
        search_members=not args.skip_members,
    )
    for row in report.rows:
        _emit(row.as_dict(), args.pretty)
    _report(
        "crosscheck",
        {"p": args.p, "max": args.max, "max_r": report.max_r},
        {
            "pairs": len(report.rows),
            "members": sum(1 for r in report.rows if r.is_final_member),
            "violated": sum(1 for r in report.rows if r.status == "violated"),
            "unresolved": len(report.unresolved),
            "member_violations": sum(
                1 for r in report.rows if r.status == "member-violated"
            ),
        },
        t0,
        args.pretty,
    )
    return 0


def _prime_powers_upto(limit: int) -> list[tuple[int, int]]:
    from .qz import is_prime

    out = []
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        r = 1
        while p**r <= limit:
            out.append((p, r))
            r += 1
    return sorted(out, key=lambda pr: (pr[0] ** pr[1], pr[0]))


def cmd_charsums(args) -> int:
    t0 = time.monotonic()
    failures = 0
    for p, r in _prime_powers_upto(args.max_q):
        F = build_field(p, r)
        g = gauss_sums_all(F)
        worst = float(np.max(np.abs(np.abs(g[1:]) - F.q**0.5))) if F.q > 2 else 0.0
        ok = worst <= GAUSS_ABS_TOL * F.q**0.5
        failures += not ok
        _emit({"suite": "gauss-modulus", "q": F.q, "worst_abs_dev": worst, "ok": ok},
              args.pretty)
    for q in MELLIN_QS:
        if q > args.max_q:
            continue
        p = min(f for f in range(2, q + 1) if q % f == 0)
        r = 0
        qq = q
        while qq > 1:
            qq //= p
            r += 1
        F = build_field(p, r)
        for pair in MELLIN_PAIRS:
            rows = mellin_suite(F, pair)
            worst = max(row.rel_error for row in rows)
            ok = worst <= MELLIN_REL_TOL
            failures += not ok
            _emit(
                {"suite": "mellin", "q": q, "d": pair[0], "e": pair[1],
                 "rows": len(rows), "worst_rel_err": worst, "ok": ok},
                args.pretty,
            )
    for r in range(1, args.switch_max_r + 1):
        checked, equal = switchsum_exhaustive(r)
        ok = checked == equal
        failures += not ok
        _emit({"suite": "switchsum", "r": r, "pairs": checked, "equal": equal, "ok": ok},
              args.pretty)
    _report(
        "charsums",
        {"max_q": args.max_q, "switch_max_r": args.switch_max_r},
        {"failures": failures},
        t0,
        args.pretty,
    )
    return 1 if failures else 0


def cmd_dump_catalog(args) -> int:
    t0 = time.monotonic()
    n = write_catalog(args.out, primes=tuple(args.p), bound=args.max)
    _report(
        "dump-catalog",
        {"out": args.out, "p": list(args.p), "max": args.max},
        {"rows": n},
        t0,
        args.pretty,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="monodromy",
        description="Exact finite-monodromy criteria for exponential sums",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--pretty", action="store_true", help="indent JSON output")

    s = sub.add_parser("vp", help="Kubert V-function value V_p(x)")
    s.add_argument("p", type=int)
    s.add_argument("fraction", type=_fraction_arg)
    common(s)
    s.set_defaults(func=cmd_v)

    s = sub.add_parser("w", help="W_p(d,e,x,y) with verdict against 3/2")
    s.add_argument("p", type=int)
    s.add_argument("d", type=int)
    s.add_argument("e", type=int)
    s.add_argument("x", type=_fraction_arg)
    s.add_argument("y", type=_fraction_arg)
    common(s)
    s.set_defaults(func=cmd_w)

    for name, help_ in (("belyi", "two-variable + one-variable inequality search"),
                        ("binomial", "binomial inequality search")):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--p", type=int, required=True)
        s.add_argument("--d", type=int, required=True)
        s.add_argument("--e", type=int, required=True)
        s.add_argument("--max-r", type=int, default=None)
        s.add_argument("--no-early-stop", action="store_true")
        common(s)
        s.set_defaults(func=_search_command, which=name)

    s = sub.add_parser("verify-witnesses", help="re-evaluate the built-in W table")
    s.add_argument("--table", help="JSON file of [p,d,e,x,y,expected] rows")
    common(s)
    s.set_defaults(func=cmd_verify_witnesses)

    s = sub.add_parser("catalog", help="enumerate family members as JSON lines")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--theorem", choices=THEOREMS, default="final")
    common(s)
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("classify", help="family memberships of one pair")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--e", type=int, required=True)
    s.add_argument("--theorem", choices=THEOREMS, default="final")
    common(s)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("crosscheck", help="scan FM-pairs and hunt violations for non-members")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--max-r", type=int, default=None)
    s.add_argument("--skip-members", action="store_true")
    common(s)
    s.set_defaults(func=cmd_crosscheck)

    s = sub.add_parser("charsums", help="Gauss/Mellin/switchsum identity suites")
    s.add_argument("--max-q", type=int, default=MELLIN_Q_GUARD)
    s.add_argument("--switch-max-r", type=int, default=8)
    common(s)
    s.set_defaults(func=cmd_charsums)

    s = sub.add_parser("dump-catalog", help="regenerate the shipped catalog file")
    s.add_argument("--out", required=True)
    s.add_argument("--max", type=int, default=300)
    s.add_argument("--p", type=int, action="append", default=None)
    common(s)
    s.set_defaults(func=cmd_dump_catalog)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "p", None) is None and args.command == "dump-catalog":
        args.p = [2, 3, 5, 7]
    if hasattr(args, "which"):
        return args.func(args, args.which)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
