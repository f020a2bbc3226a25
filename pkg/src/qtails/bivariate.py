"""Two-variable tail series and truncated Jacobi-triple-product scans.

Coefficients of q^n are finite Laurent polynomials in z, stored densely
with an explicit lowest exponent.  The (1-z) factor common to the theta
numerators is divided out symbolically: each theta term
(-1)^j q^{j(j+1)/2} z^{-j} (1 - z^{2j+1}) becomes
(-1)^j q^{j(j+1)/2} z^{-j} (1 + z + ... + z^{2j}), which is exact.

Scans distinguish hard checks (symmetry, edge coefficient: a failure is
a bug) from conjecture outcomes (a failure is a counterexample record).
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import CoefficientSeries, div_one_minus_qa, pentagonal


@dataclass(frozen=True)
class LaurentPoly:
    """Laurent polynomial in z: coeffs[e] is the coefficient of z^{lo+e}."""

    lo: int
    coeffs: tuple[int, ...]

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def __getitem__(self, e: int) -> int:
        if self.lo <= e <= self.hi:
            return self.coeffs[e - self.lo]
        return 0

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coeffs)

    def trimmed(self) -> LaurentPoly:
        c = list(self.coeffs)
        lo = self.lo
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        while len(c) > 1 and c[0] == 0:
            c.pop(0)
            lo += 1
        if len(c) == 1 and c[0] == 0:
            lo = 0
        return LaurentPoly(lo, tuple(c))

    def shift(self, e: int) -> LaurentPoly:
        """Multiply by z^e."""
        return LaurentPoly(self.lo + e, self.coeffs)

    def scale(self, c: int) -> LaurentPoly:
        return LaurentPoly(self.lo, tuple(c * v for v in self.coeffs))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return LaurentPoly(
            lo, tuple(self[e] + other[e] for e in range(lo, hi + 1))
        )

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + other.scale(-1)

    def at_one(self) -> int:
        return sum(self.coeffs)

    def is_symmetric(self) -> bool:
        t = self.trimmed()
        return t.lo == -t.hi and t.coeffs == t.coeffs[::-1]


ZERO_POLY = LaurentPoly(0, (0,))


def geometric_block(j: int, sign: int) -> LaurentPoly:
    """sign * z^{-j} (1 + z + ... + z^{2j}): one theta term with (1-z)
    divided out."""
    return LaurentPoly(-j, (sign,) * (2 * j + 1))


@dataclass(frozen=True)
class BiSeries:
    """Series in q truncated at ``order`` with LaurentPoly coefficients."""

    coeffs: tuple[LaurentPoly, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.coeffs[n]

    def scale(self, c: int) -> BiSeries:
        return BiSeries(tuple(p.scale(c) for p in self.coeffs))


def bi_zero(order: int) -> BiSeries:
    return BiSeries((ZERO_POLY,) * (order + 1))


def bi_tail_numerator(k: int, finite: bool, order: int) -> BiSeries:
    """The theta numerator with (1-z) divided out.

    finite=True sums 0 <= j <= k; finite=False sums j >= k (terms with
    exponent beyond the truncation order drop out).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    rows: list[LaurentPoly] = [ZERO_POLY] * (order + 1)
    j = 0 if finite else k
    while True:
        e = j * (j + 1) // 2
        if e > order or (finite and j > k):
            break
        sign = 1 if j % 2 == 0 else -1
        rows[e] = rows[e] + geometric_block(j, sign)
        j += 1
    return BiSeries(tuple(rows))


def bi_divide(s: BiSeries, kind: str, i: int) -> BiSeries:
    """Divide by (1 - z q^i) [kind='z'] or (1 - z^{-1} q^i) [kind='zinv'].

    The factor's non-constant term has positive q-order, so the
    recurrence t_n = s_n + z^{+-1} t_{n-i} is well founded.
    """
    if i < 1:
        raise ValueError("factor q-exponent must be >= 1")
    step = _z_step(kind)
    out: list[LaurentPoly] = []
    for n in range(s.order + 1):
        p = s[n]
        if n >= i:
            p = p + out[n - i].shift(step)
        out.append(p)
    return BiSeries(tuple(out))


def bi_multiply(s: BiSeries, kind: str, i: int) -> BiSeries:
    """Multiply by (1 - z q^i) or (1 - z^{-1} q^i); inverse of bi_divide."""
    if i < 1:
        raise ValueError("factor q-exponent must be >= 1")
    step = _z_step(kind)
    out = [
        s[n] - s[n - i].shift(step) if n >= i else s[n]
        for n in range(s.order + 1)
    ]
    return BiSeries(tuple(out))


def _z_step(kind: str) -> int:
    if kind == "z":
        return 1
    if kind == "zinv":
        return -1
    raise ValueError(f"unknown factor kind: {kind}")


def bi_divide_q(s: BiSeries, i: int) -> BiSeries:
    """Divide by the z-free factor (1 - q^i)."""
    if i < 1:
        raise ValueError("factor q-exponent must be >= 1")
    out: list[LaurentPoly] = []
    for n in range(s.order + 1):
        p = s[n]
        if n >= i:
            p = p + out[n - i]
        out.append(p)
    return BiSeries(tuple(out))


def mul_one_minus_z(p: LaurentPoly) -> LaurentPoly:
    return p - p.shift(1)


def conj54_table(k: int, d: int, n_max: int) -> list[LaurentPoly]:
    """Rows L^d_{k,n}(z) for 0 <= n <= n_max: the signed tail numerator
    over (1-z)(qz, q/z; q)_d, with the q^{k(k+1)/2} shift removed."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    shift = k * (k + 1) // 2
    order = n_max + shift
    s = bi_tail_numerator(k, finite=False, order=order)
    if k % 2 == 1:
        s = s.scale(-1)
    for i in range(1, d + 1):
        s = bi_divide(s, "z", i)
        s = bi_divide(s, "zinv", i)
    for n in range(shift):
        if not s[n].is_zero():
            raise ArithmeticError(f"unexpected support below the q^{shift} shift")
    return [s[shift + n].trimmed() for n in range(n_max + 1)]


def conj53_table(k: int, n_max: int) -> list[LaurentPoly]:
    """Rows of J^T_k(m, n): the finite numerator over (z, q/z, q; q)_infty."""
    if k < 0:
        raise ValueError("k must be >= 0")
    s = bi_tail_numerator(k, finite=True, order=n_max)
    if k % 2 == 1:
        s = s.scale(-1)
    for i in range(1, n_max + 1):
        s = bi_divide(s, "z", i)
        s = bi_divide(s, "zinv", i)
        s = bi_divide_q(s, i)
    return [s[n].trimmed() for n in range(n_max + 1)]


def check_unimodal(p: LaurentPoly) -> bool:
    """True iff the coefficients first (weakly) increase, then decrease."""
    seq = p.trimmed().coeffs
    i = 0
    while i + 1 < len(seq) and seq[i + 1] >= seq[i]:
        i += 1
    while i + 1 < len(seq) and seq[i + 1] <= seq[i]:
        i += 1
    return i == len(seq) - 1


def unimodal_window(p: LaurentPoly, lo: int, hi: int) -> bool:
    """Unimodality of the coefficient slice for exponents lo..hi."""
    window = LaurentPoly(lo, tuple(p[e] for e in range(lo, hi + 1)))
    return check_unimodal(window)


def trunc_jtp_series(
    big_r: int, s_exp: int, k: int, mode: str, order: int
) -> CoefficientSeries:
    """Truncated Jacobi-triple-product quotient with modulus R and step S.

    head: sum over 0 <= n < k of the theta head, over the full product
    (q^S, q^{R-S}, q^R; q^R)_infty.  tail: sum over j >= k, over the
    two-class product (q^S, q^{R-S}; q^R)_infty.
    """
    if not 1 <= s_exp < big_r / 2:
        raise ValueError("need 1 <= S < R/2")
    if k < 0:
        raise ValueError("k must be >= 0")
    out = [0] * (order + 1)
    if mode == "head":
        for n in range(k):
            e = (n * (n + 1) // 2) * big_r - n * s_exp
            if e > order:
                break
            sign = 1 if (n + k - 1) % 2 == 0 else -1
            out[e] += sign
            e2 = e + (2 * n + 1) * s_exp
            if e2 <= order:
                out[e2] -= sign
        residues = {s_exp % big_r, (big_r - s_exp) % big_r, 0}
    elif mode == "tail":
        j = k
        while True:
            e = (j * (j + 1) // 2) * big_r - j * s_exp
            if e > order:
                break
            sign = 1 if (j - k) % 2 == 0 else -1
            out[e] += sign
            e2 = e + (2 * j + 1) * s_exp
            if e2 <= order:
                out[e2] -= sign
            j += 1
        residues = {s_exp % big_r, (big_r - s_exp) % big_r}
    else:
        raise ValueError(f"unknown mode: {mode}")
    series = CoefficientSeries(tuple(out))
    for n in range(1, order + 1):
        if n % big_r in residues:
            series = div_one_minus_qa(series, n)
    return series


def scan_trunc_jtp(
    big_r: int, s_exp: int, k_max: int, mode: str, order: int
) -> list[dict]:
    """Nonnegativity scan; each negative coefficient is one finding.

    The head claim covers positive exponents only (the constant term is
    (-1)^{k-1} by construction), so the head scan starts at q^1; the
    tail claim covers every coefficient.
    """
    findings = []
    start = 1 if mode == "head" else 0
    for k in range(1, k_max + 1):
        series = trunc_jtp_series(big_r, s_exp, k, mode, order)
        for n in range(start, order + 1):
            if series[n] < 0:
                findings.append(
                    {
                        "conjecture": "trunc-jtp",
                        "mode": mode,
                        "R": big_r,
                        "S": s_exp,
                        "k": k,
                        "n": n,
                        "value": series[n],
                    }
                )
    return findings


def scan_conj54(
    k_max: int, d_max: int, n_max: int
) -> tuple[list[dict], list[dict]]:
    """Scan the two-variable tail conjecture grid.

    Returns (findings, observations).  Symmetry, the support bound and
    the edge coefficient J(n+k) = 1 are hard assertions.  Positivity for
    d >= 2 and unimodality for d >= 3 are conjecture findings; the
    unimodality status of d <= 2 cells is recorded as an observation
    only, since the conjecture does not claim it either way.
    """
    findings: list[dict] = []
    observations: list[dict] = []
    for d in range(1, d_max + 1):
        for k in range(1, k_max + 1):
            rows = conj54_table(k, d, n_max)
            for n, row in enumerate(rows):
                t = row.trimmed()
                if t.lo < -n - k or t.hi > n + k:
                    raise ArithmeticError(
                        f"support bound violated at k={k}, d={d}, n={n}"
                    )
                if not t.is_symmetric():
                    raise ArithmeticError(
                        f"symmetry violated at k={k}, d={d}, n={n}"
                    )
                if row[n + k] != 1:
                    raise ArithmeticError(
                        f"edge coefficient J({n + k}) != 1 at k={k}, d={d}, n={n}"
                    )
                negatives = [
                    m
                    for m in range(-n - k, n + k + 1)
                    if row[m] <= 0
                ]
                if d >= 2 and negatives:
                    findings.append(
                        {
                            "conjecture": "bivariate-tail-positivity",
                            "k": k,
                            "d": d,
                            "n": n,
                            "m": negatives[0],
                            "value": row[negatives[0]],
                        }
                    )
                unimodal = unimodal_window(row, -n - k, n + k)
                if d >= 3 and not unimodal:
                    findings.append(
                        {
                            "conjecture": "bivariate-tail-unimodality",
                            "k": k,
                            "d": d,
                            "n": n,
                        }
                    )
                if d <= 2 and not unimodal:
                    observations.append(
                        {
                            "observation": "not-unimodal",
                            "k": k,
                            "d": d,
                            "n": n,
                        }
                    )
    return findings, observations


def scan_conj53(k_max: int, n_max: int) -> list[dict]:
    """Unimodality scan of the finite-truncation rows over -n <= m <= n."""
    findings = []
    for k in range(k_max + 1):
        rows = conj53_table(k, n_max)
        for n, row in enumerate(rows):
            if not row.is_symmetric():
                raise ArithmeticError(f"row symmetry violated at k={k}, n={n}")
            if n >= 1 and not unimodal_window(row, -n, n):
                findings.append(
                    {"conjecture": "bivariate-finite-unimodality", "k": k, "n": n}
                )
    return findings
