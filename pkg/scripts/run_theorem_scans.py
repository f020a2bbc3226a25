"""Run every theorem-level verification and write the reports to disk.

Usage: python3 scripts/run_theorem_scans.py [--out-dir reports] [--workers N]
"""

import argparse
import pathlib
import sys
import time

from qtails.verifier import emit_report, verify_theorem

THEOREMS = ("mth1", "mth2", "th2", "th1")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    failed = []
    for theorem in THEOREMS:
        start = time.monotonic()
        report = verify_theorem(theorem, workers=args.workers)
        elapsed = time.monotonic() - start
        path = out_dir / f"{theorem}.{args.format}"
        path.write_bytes(emit_report(report, args.format))
        print(
            f"{theorem}: {report.status} "
            f"({len(report.zeros)} zeros, {len(report.negatives)} negatives, "
            f"{elapsed:.2f}s) -> {path}"
        )
        if report.status != "pass":
            failed.append(theorem)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
