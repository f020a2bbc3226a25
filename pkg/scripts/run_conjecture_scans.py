"""Desk-scale conjecture scans: truncated JTP quotients and the
two-variable tail rows.

Prints every counterexample record; exits 3 if any were found, matching
the CLI's exit contract.

Usage: python3 scripts/run_conjecture_scans.py [--kmax 4] [--dmax 5] [--nmax 40]
"""

import argparse
import json
import sys

from qtails.bivariate import scan_conj53, scan_conj54, scan_trunc_jtp

JTP_CELLS = ((5, 1), (5, 2), (7, 2), (7, 3))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=4)
    parser.add_argument("--dmax", type=int, default=5)
    parser.add_argument("--nmax", type=int, default=40)
    parser.add_argument("--order", type=int, default=120)
    args = parser.parse_args()

    findings = []
    for big_r, s_exp in JTP_CELLS:
        for mode in ("head", "tail"):
            found = scan_trunc_jtp(big_r, s_exp, args.kmax, mode, args.order)
            print(f"trunc-jtp R={big_r} S={s_exp} {mode}: {len(found)} findings")
            findings.extend(found)

    tail_findings, observations = scan_conj54(args.kmax, args.dmax, args.nmax)
    pos = sum(1 for f in tail_findings if f["conjecture"].endswith("positivity"))
    uni = len(tail_findings) - pos
    print(f"bivariate-tail: {pos} positivity findings, {uni} unimodality findings, "
          f"{len(observations)} low-d observations")
    findings.extend(tail_findings)

    finite_findings = scan_conj53(args.kmax, args.nmax)
    print(f"bivariate-finite: {len(finite_findings)} findings")
    findings.extend(finite_findings)

    for f in sorted(findings, key=lambda f: json.dumps(f, sort_keys=True)):
        print("counterexample:", json.dumps(f, sort_keys=True))
    return 3 if findings else 0


if __name__ == "__main__":
    sys.exit(main())
