"""Command-line front end.

Exit codes, stable across all commands:
  0  pass
  1  theorem mismatch / counterexample to a proven statement / bug
  2  usage error or resource-cap refusal
  3  conjecture counterexample (distinct from 1: a publishable finding)
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import golden
from .agb import (
    AGBParams,
    ag_product_side,
    ag_sum_side,
    dregular_bruteforce,
    tail_over_residue_classes,
)
from .bounds import l_cap, profile_bounds
from .bivariate import scan_conj53, scan_conj54, scan_trunc_jtp
from .polya import Triple, periodic_profile
from .series import (
    mul,
    one,
    partitions_into,
    pentagonal,
    pentagonal_tail,
    pochhammer,
    theta_jtp,
)
from .tails import check_am_identity, mk_bruteforce
from .verifier import (
    VerificationReport,
    emit_report,
    verify_theorem,
    verify_triple,
)

DEFAULT_MAX_ORDER = 200_000
DEFAULT_ENUM_CAP = 40
WORKERS_ENV = "QTAILS_WORKERS"


def frac_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def compute_table2_rows() -> list[dict]:
    rows = []
    for abc in golden.TRIPLES:
        t = Triple(*abc)
        p = periodic_profile(t)
        bt = profile_bounds(p)
        rows.append(
            {
                "triple": list(abc),
                "C": frac_str(p.c),
                "B": frac_str(p.b_f),
                "K": bt.k_cap,
                "L": [l_cap(p, k) for k in range(1, 9)],
            }
        )
    return rows


def cmd_table2(args) -> int:
    rows = compute_table2_rows()
    diffs = []
    for row in rows:
        abc = tuple(row["triple"])
        c, b, k_cap, ls = golden.TABLE2[abc]
        if (row["C"], row["B"], row["K"], tuple(row["L"])) != (c, b, k_cap, ls):
            diffs.append(
                f"{abc}: computed (C={row['C']}, B={row['B']}, K={row['K']}, "
                f"L={row['L']}) expected (C={c}, B={b}, K={k_cap}, L={list(ls)})"
            )
    if args.format == "json":
        print(json.dumps({"rows": rows, "matches_golden": not diffs}, sort_keys=True))
    elif args.format == "csv":
        print("triple,C,B,K," + ",".join(f"L{k}" for k in range(1, 9)))
        for row in rows:
            abc = ",".join(str(x) for x in row["triple"])
            print(
                f"\"({abc})\",{row['C']},{row['B']},{row['K']},"
                + ",".join(str(x) for x in row["L"])
            )
    else:
        for row in rows:
            print(
                f"({','.join(str(x) for x in row['triple'])}): "
                f"C={row['C']} B={row['B']} K={row['K']} L={row['L']}"
            )
    if diffs:
        for d in diffs:
            print(f"MISMATCH {d}", file=sys.stderr)
        return 1
    return 0


def _write_report(report: VerificationReport, args) -> None:
    data = emit_report(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def cmd_verify(args) -> int:
    if bool(args.theorem) == bool(args.triple):
        print("verify needs exactly one of --theorem / --triple", file=sys.stderr)
        return 2
    if args.theorem:
        report = verify_theorem(args.theorem, workers=args.workers)
        _write_report(report, args)
        return 0 if report.status == "pass" else 1
    try:
        t = Triple(*parse_triple(args.triple))
        report = verify_triple(
            t,
            k_max_override=args.kmax,
            workers=args.workers,
            max_order=args.nmax,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write_report(report, args)
    return 0 if report.status == "pass" else 1


def parse_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"triple must be three comma-separated integers: {text!r}")
    return tuple(int(x) for x in parts)  # type: ignore[return-value]


def cmd_identity(args) -> int:
    n = args.order
    if args.id == "pnt":
        ok = pochhammer(1, 1, None, n) == pentagonal_tail(0, n)
    elif args.id == "am":
        ok, mismatch = check_am_identity(args.k, n)
        if not ok:
            print(f"first mismatch at q^{mismatch}", file=sys.stderr)
    elif args.id == "ag":
        p = AGBParams(d=args.d, i=args.i, tau=args.tau)
        ok = ag_product_side(p, n) == ag_sum_side(p, n)
    elif args.id == "jtp":
        product = mul(
            mul(pochhammer(args.i, args.d, None, n), pochhammer(args.d - args.i, args.d, None, n)),
            pochhammer(args.d, args.d, None, n),
        )
        ok = theta_jtp(args.i, args.d, n) == product
    elif args.id == "cor25":
        lhs = mul(pochhammer(3, 12, None, n), pochhammer(9, 12, None, n))
        rhs = pochhammer(3, 3, None, n)
        for a in range(1, n + 1):
            if a % 12 in (6, 0):
                rhs = _div(rhs, a)
        ok = lhs == rhs
        for k in range(1, args.k + 1):
            s = tail_over_residue_classes(k, 12, {0, 3, 9}, n)
            gk = pentagonal(k)
            ok = ok and all(s[m] == 0 for m in range(gk)) and all(
                s[m] > 0 for m in range(gk, n + 1)
            )
    else:
        print(f"unknown identity id: {args.id}", file=sys.stderr)
        return 2
    print("pass" if ok else "FAIL")
    return 0 if ok else 1


def _div(s, a):
    from .series import div_one_minus_qa

    return div_one_minus_qa(s, a)


def cmd_conjecture(args) -> int:
    findings: list[dict] = []
    observations: list[dict] = []
    try:
        if args.id == "trunc-jtp":
            if args.R is None or args.S is None:
                raise ValueError("trunc-jtp needs --R and --S")
            findings = scan_trunc_jtp(args.R, args.S, args.kmax, args.mode, args.order)
            subject = f"trunc-jtp R={args.R} S={args.S} mode={args.mode}"
        elif args.id == "bivariate-tail":
            findings, observations = scan_conj54(args.kmax, args.dmax, args.nmax)
            subject = f"bivariate-tail kmax={args.kmax} dmax={args.dmax} nmax={args.nmax}"
        elif args.id == "bivariate-finite":
            findings = scan_conj53(args.kmax, args.nmax)
            subject = f"bivariate-finite kmax={args.kmax} nmax={args.nmax}"
        else:
            print(f"unknown conjecture id: {args.id}", file=sys.stderr)
            return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = VerificationReport(subject=subject)
    report.conjecture_findings = sorted(
        findings, key=lambda f: json.dumps(f, sort_keys=True)
    ) + sorted(observations, key=lambda f: json.dumps(f, sort_keys=True))
    report.status = "counterexample" if findings else "pass"
    _write_report(report, args)
    return 3 if findings else 0


def cmd_oracle(args) -> int:
    try:
        if args.which == "mk":
            print(mk_bruteforce(args.k, args.n, cap=args.cap))
        elif args.which == "partitions":
            parts = {int(x) for x in args.parts.split(",")}
            if args.n > args.cap:
                raise ValueError(f"n={args.n} exceeds the enumeration cap {args.cap}")
            print(partitions_into(parts, args.n)[args.n])
        elif args.which == "dregular":
            print(dregular_bruteforce(args.d, args.n, cap=args.cap))
        else:
            print(f"unknown oracle: {args.which}", file=sys.stderr)
            return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtails",
        description="Exact pentagonal-tail positivity toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table2", help="reproduce the bound-constant table")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("verify", help="run a theorem or single-triple scan")
    p.add_argument("--theorem", choices=("mth1", "mth2", "th2", "th1"))
    p.add_argument("--triple", help="a,b,c (pairwise coprime, distinct)")
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--nmax", type=int, default=DEFAULT_MAX_ORDER,
                   help="truncation-order cap; the scan refuses to exceed it")
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--workers", type=int, default=default_workers())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identity", help="coefficientwise identity checks")
    p.add_argument("--id", required=True,
                   choices=("pnt", "am", "ag", "jtp", "cor25"))
    p.add_argument("--order", type=int, default=200)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--tau", type=int, default=0)
    p.add_argument("--i", type=int, default=1)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("conjecture", help="desk-scale conjecture scans")
    p.add_argument("--id", required=True,
                   choices=("trunc-jtp", "bivariate-tail", "bivariate-finite"))
    p.add_argument("--R", type=int, default=None)
    p.add_argument("--S", type=int, default=None)
    p.add_argument("--mode", choices=("head", "tail"), default="tail")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=30)
    p.add_argument("--order", type=int, default=120)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("oracle", help="brute-force enumeration oracles")
    p.add_argument("--which", required=True,
                   choices=("mk", "partitions", "dregular"))
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--parts", default="1,2,3")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
