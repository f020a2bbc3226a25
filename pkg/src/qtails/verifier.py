"""Positivity scans for tail series and comparison against known exceptions.

A scan for one triple splits each k into three regions: the head
[g_k, g_k+2k], where coefficients equal the closed-form partition count
and zeros belong to parametric families; a finite box checked
coefficient by coefficient; and the guaranteed region beyond the bound
table, which needs no scan.  Scan cells are pure functions, so they can
run in a process pool; results are merged by sorting, which makes the
output independent of the worker count.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .agb import b_trunc_series, c_series
from .bounds import (
    guaranteed_block_start,
    tabulated_block_start,
    profile_bounds,
)
from .polya import Triple, periodic_profile, r_closed_form, r_zero_offsets
from .series import CoefficientSeries, pentagonal
from .tails import tp_series


@dataclass
class VerificationReport:
    subject: str
    scanned: list = field(default_factory=list)
    zeros: list = field(default_factory=list)
    negatives: list = field(default_factory=list)
    parametric_zeros: list = field(default_factory=list)
    extra_block_findings: list = field(default_factory=list)
    conjecture_findings: list = field(default_factory=list)
    status: str = "pass"

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "scanned": self.scanned,
            "zeros": self.zeros,
            "negatives": self.negatives,
            "parametric_zeros": self.parametric_zeros,
            "extra_block_findings": self.extra_block_findings,
            "conjecture_findings": self.conjecture_findings,
            "status": self.status,
        }


@dataclass(frozen=True)
class ExceptionSet:
    """Known exceptional values: finite zeros/negatives per (cell, k) plus
    parametric head families (cell, offset j, first k) meaning a zero at
    g_k + j for every k >= first k."""

    zeros: tuple = ()
    negatives: tuple = ()
    parametric: tuple = ()


class InternalConsistencyError(Exception):
    """A closed-form or support check failed; indicates a bug, not a finding."""


def scan_positivity(
    s: CoefficientSeries, lo: int, hi: int
) -> tuple[list[int], list[tuple[int, int]]]:
    """Classify coefficients in [lo, hi): returns (zeros, negatives)."""
    if hi > s.order + 1:
        raise ValueError(f"window [{lo},{hi}) exceeds truncation order {s.order}")
    zeros, negatives = [], []
    for n in range(lo, hi):
        v = s[n]
        if v == 0:
            zeros.append(n)
        elif v < 0:
            negatives.append((n, v))
    return zeros, negatives


def _triple_cell(args: tuple[int, int, int, int]) -> dict:
    """Scan one (triple, k) cell; pure and picklable for worker pools."""
    alpha, beta, gamma, k = args
    t = Triple(alpha, beta, gamma)
    p = periodic_profile(t)
    bt = profile_bounds(p)
    gk = pentagonal(k)
    hi = guaranteed_block_start(p, k, bt)
    tabulated_hi = tabulated_block_start(p, k, bt)
    order = max(hi - 1, gk + 2 * k)
    s = tp_series(t, k, order)

    for n in range(min(gk, order + 1)):
        if s[n] != 0:
            raise InternalConsistencyError(f"support of TP^{k} leaks below g_k at {n}")

    head_zero_offsets = []
    for j in range(2 * k + 1):
        n = gk + j
        if n > order:
            break
        expected = r_closed_form(p, j)
        if s[n] != expected:
            raise InternalConsistencyError(
                f"head formula fails for {t}, k={k}, n={n}: {s[n]} != {expected}"
            )
        if expected == 0:
            head_zero_offsets.append(j)

    zeros, extra = [], []
    negatives = []
    for n in range(gk + 2 * k + 1, hi):
        v = s[n]
        if v == 0:
            (extra if n >= tabulated_hi else zeros).append([k, n])
        elif v < 0:
            negatives.append([k, n, v])
    return {
        "k": k,
        "window": [k, gk, hi],
        "zeros": zeros,
        "negatives": negatives,
        "extra": extra,
        "head_zero_offsets": head_zero_offsets,
    }


def _run_cells(fn, cells: list, workers: int) -> list:
    if workers <= 1 or len(cells) <= 1:
        return [fn(c) for c in cells]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, cells))


def parametric_family_text(t: Triple, j: int) -> str:
    k_min = max(1, (j + 1) // 2)
    return f"TP{t}^k(k(3k+1)/2+{j}) = 0 for all k >= {k_min}"


def verify_triple(
    t: Triple,
    k_min: int = 1,
    k_max_override: int | None = None,
    workers: int = 1,
    max_order: int = 200_000,
) -> VerificationReport:
    """Full three-region scan of TP for one triple (raw mode: no
    comparison against recorded exceptions; status reflects only
    whether negatives were found)."""
    p = periodic_profile(t)
    bt = profile_bounds(p)
    k_max = k_max_override if k_max_override is not None else bt.k_cap
    for k in range(k_min, k_max + 1):
        need = guaranteed_block_start(p, k, bt)
        if need > max_order:
            raise ValueError(
                f"scan for {t}, k={k} needs truncation order {need} > cap {max_order}"
            )
    cells = [(t.alpha, t.beta, t.gamma, k) for k in range(k_min, k_max + 1)]
    results = sorted(_run_cells(_triple_cell, cells, workers), key=lambda r: r["k"])

    r_zeros = r_zero_offsets(t)
    report = VerificationReport(subject=f"triple {t}")
    for res in results:
        for j in res["head_zero_offsets"]:
            if j not in r_zeros:
                raise InternalConsistencyError(
                    f"head zero offset {j} for {t} not among zeros of R"
                )
        report.scanned.append(res["window"])
        report.zeros.extend(res["zeros"])
        report.negatives.extend(res["negatives"])
        report.extra_block_findings.extend(res["extra"])
    report.zeros.sort()
    report.negatives.sort()
    report.extra_block_findings.sort()
    report.parametric_zeros = [parametric_family_text(t, j) for j in r_zeros]
    report.status = "counterexample" if report.negatives else "pass"
    return report


# Known exceptional zeros of the tail series, per triple and k.
MTH1_TRIPLES = ((1, 2, 3), (1, 2, 5), (1, 2, 7), (1, 3, 4), (1, 3, 5))
MTH1_EXPECTED = {
    (1, 2, 3): ExceptionSet(zeros=((1, 13),)),
    (1, 2, 5): ExceptionSet(zeros=((1, 11), (1, 13), (1, 15))),
    (1, 2, 7): ExceptionSet(
        zeros=((1, 7), (1, 9), (1, 11), (1, 13), (1, 14), (1, 15))
    ),
    (1, 3, 4): ExceptionSet(
        zeros=((1, 11), (1, 13), (1, 14), (1, 17), (1, 38), (1, 41))
    ),
    (1, 3, 5): ExceptionSet(
        zeros=((1, 10), (1, 11), (1, 13), (1, 14), (1, 16), (1, 37))
    ),
}

MTH2_TRIPLES = ((1, 4, 9), (2, 3, 5), (2, 3, 7))
MTH2_EXPECTED = {
    (1, 4, 9): ExceptionSet(zeros=((2, 21), (2, 24), (2, 25))),
    (2, 3, 5): ExceptionSet(zeros=((2, 20), (2, 23)), parametric=((1, 1),)),
    (2, 3, 7): ExceptionSet(
        zeros=((2, 12), (2, 15), (2, 18), (2, 21), (2, 24), (2, 27)),
        parametric=((1, 1),),
    ),
}

# C-series cells scanned for the truncated Andrews--Gordon--Bressoud
# theorem: (i, modulus) -> per-k zeros / negatives inside [g_k, 200].
TH2_CELLS = ((1, 5), (2, 5), (1, 7), (1, 9), (1, 11))
TH2_ORDER = 200
TH2_KMAX = 4
TH2_EXPECTED_ZEROS = {
    (1, 5): {1: (3, 5, 9, 11), 2: (8, 12), 3: (16,), 4: (27,)},
    (2, 5): {1: (5, 7, 9, 11), 2: (), 3: (), 4: ()},
    (1, 7): {1: (3, 5, 7, 9), 2: (8,), 3: (16,), 4: (27,)},
    (1, 9): {1: (3, 5, 7), 2: (8,), 3: (16,), 4: (27,)},
    (1, 11): {1: (3, 5, 7), 2: (8,), 3: (16,), 4: (27,)},
}
TH2_EXPECTED_NEGATIVES = {
    (1, 5): {1: ((7, -1), (13, -1))},
}

TH1_DMAX = 10
TH1_KMAX = 4
TH1_ORDER = 200


def _cseries_cell(args: tuple[int, int, int, int]) -> dict:
    i, modulus, k, order = args
    s = c_series(i, modulus, k, order)
    gk = pentagonal(k)
    for n in range(min(gk, order + 1)):
        if s[n] != 0:
            raise InternalConsistencyError(
                f"support of C^{k}_{{{i},{modulus}}} leaks below g_k at {n}"
            )
    zeros, negatives = scan_positivity(s, gk, order + 1)
    return {
        "cell": [i, modulus],
        "k": k,
        "window": [f"({i},{modulus})", k, gk, order + 1],
        "zeros": zeros,
        "negatives": negatives,
    }


def _btrunc_cell(args: tuple[int, int, int]) -> dict:
    d, k, order = args
    s = b_trunc_series(d, k, order)
    gk = pentagonal(k)
    for n in range(min(gk, order + 1)):
        if s[n] != 0:
            raise InternalConsistencyError(
                f"support of B_{d}^{k} leaks below g_k at {n}"
            )
    zeros, negatives = scan_positivity(s, gk, order + 1)
    return {
        "cell": d,
        "k": k,
        "window": [f"d={d}", k, gk, order + 1],
        "zeros": zeros,
        "negatives": negatives,
    }


def _verify_tp_theorem(
    subject: str, triples, expected: dict, k_min: int, workers: int
) -> VerificationReport:
    report = VerificationReport(subject=subject)
    mismatch = False
    for abc in triples:
        t = Triple(*abc)
        sub = verify_triple(t, k_min=k_min, workers=workers)
        label = str(t)
        report.scanned.extend([label] + w for w in sub.scanned)
        report.zeros.extend([label, k, n] for k, n in sub.zeros)
        report.negatives.extend([label, k, n, v] for k, n, v in sub.negatives)
        report.extra_block_findings.extend(
            [label, k, n] for k, n in sub.extra_block_findings
        )
        report.parametric_zeros.extend(sub.parametric_zeros)

        exp = expected[abc]
        found_zeros = {tuple(z) for z in sub.zeros}
        found_param = {
            (j, max(1, (j + 1) // 2)) for j in r_zero_offsets(t)
        }
        if (
            found_zeros != set(exp.zeros)
            or {tuple(z) for z in sub.negatives} != set(exp.negatives)
            or found_param != set(exp.parametric)
        ):
            mismatch = True
    report.status = "mismatch-with-paper" if mismatch else "pass"
    return report


def verify_theorem(theorem_id: str, workers: int = 1) -> VerificationReport:
    """Run the scan behind one of the named statements and compare the
    findings with the recorded exception sets."""
    if theorem_id == "mth1":
        return _verify_tp_theorem("mth1", MTH1_TRIPLES, MTH1_EXPECTED, 1, workers)
    if theorem_id == "mth2":
        return _verify_tp_theorem("mth2", MTH2_TRIPLES, MTH2_EXPECTED, 2, workers)
    if theorem_id == "th2":
        return _verify_th2(workers)
    if theorem_id == "th1":
        return _verify_th1(workers)
    raise ValueError(f"unknown theorem id: {theorem_id}")


def _verify_th2(workers: int) -> VerificationReport:
    cells = [
        (i, m, k, TH2_ORDER) for (i, m) in TH2_CELLS for k in range(1, TH2_KMAX + 1)
    ]
    results = _run_cells(_cseries_cell, cells, workers)
    results.sort(key=lambda r: (r["cell"], r["k"]))
    report = VerificationReport(subject="th2")
    mismatch = False
    for res in results:
        i, m = res["cell"]
        k = res["k"]
        label = f"({i},{m})"
        report.scanned.append(res["window"])
        report.zeros.extend([label, k, n] for n in res["zeros"])
        report.negatives.extend([label, k, n, v] for n, v in res["negatives"])
        exp_z = TH2_EXPECTED_ZEROS[(i, m)].get(k, ())
        exp_n = TH2_EXPECTED_NEGATIVES.get((i, m), {}).get(k, ())
        if tuple(res["zeros"]) != tuple(exp_z) or tuple(
            tuple(x) for x in res["negatives"]
        ) != tuple(exp_n):
            mismatch = True
    report.status = "mismatch-with-paper" if mismatch else "pass"
    return report


def _verify_th1(workers: int) -> VerificationReport:
    cells = [
        (d, k, TH1_ORDER)
        for d in range(2, TH1_DMAX + 1)
        for k in range(1, TH1_KMAX + 1)
    ]
    results = _run_cells(_btrunc_cell, cells, workers)
    results.sort(key=lambda r: (r["cell"], r["k"]))
    report = VerificationReport(subject="th1")
    mismatch = False
    for res in results:
        label = f"d={res['cell']}"
        report.scanned.append(res["window"])
        report.zeros.extend([label, res["k"], n] for n in res["zeros"])
        report.negatives.extend(
            [label, res["k"], n, v] for n, v in res["negatives"]
        )
        if res["zeros"] or res["negatives"]:
            mismatch = True
    report.status = "mismatch-with-paper" if mismatch else "pass"
    return report


def emit_report(report: VerificationReport, fmt: str = "json") -> bytes:
    """Deterministic serialization; identical reports give identical bytes."""
    if fmt == "json":
        text = json.dumps(report.as_dict(), sort_keys=True, separators=(",", ":"))
        return (text + "\n").encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "cell", "k", "n", "value"])
        for row in report.zeros:
            w.writerow(["zero"] + _csv_cells(row) + [""])
        for row in report.negatives:
            w.writerow(["negative"] + _csv_cells(row[:-1]) + [row[-1]])
        for row in report.extra_block_findings:
            w.writerow(["extra-block-zero"] + _csv_cells(row) + [""])
        for text in report.parametric_zeros:
            w.writerow(["parametric", text, "", "", ""])
        for f in report.conjecture_findings:
            w.writerow(["conjecture", json.dumps(f, sort_keys=True), "", "", ""])
        w.writerow(["status", report.status, "", "", ""])
        return buf.getvalue().encode("utf-8")
    if fmt == "text":
        lines = [f"subject: {report.subject}", f"status: {report.status}"]
        lines.append(f"scanned windows: {len(report.scanned)}")
        for row in report.zeros:
            lines.append(f"zero at {row}")
        for row in report.negatives:
            lines.append(f"negative at {row}")
        for row in report.extra_block_findings:
            lines.append(f"extra-block zero at {row}")
        for text in report.parametric_zeros:
            lines.append(f"parametric family: {text}")
        for f in report.conjecture_findings:
            lines.append(f"conjecture finding: {json.dumps(f, sort_keys=True)}")
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format: {fmt}")


def _csv_cells(row) -> list:
    # rows are [k, n] for triple reports and [cell, k, n] for theorem reports
    if len(row) == 2:
        return ["", row[0], row[1]]
    return [row[0], row[1], row[2]]
