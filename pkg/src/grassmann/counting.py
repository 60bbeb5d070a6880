"""Exact evaluation of the counts C1, C2, C3, D, E and Q_k.

All quantities are Python ints or ``fractions.Fraction``; nothing here
touches floating point. Ground-set size for the counted family is
n = 4k + 9, and Q_k < 1 is the statement that its subalgebra has dimension
below 3 * 2^(n-2).
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

WORKERS_ENV = "GRASSMANN_WORKERS"


class CertificateError(ArithmeticError):
    """An identity or integrality assertion failed."""

    def __init__(self, identity: str, k, detail: str = ""):
        self.identity = identity
        self.k = k
        msg = f"{identity} fails at k={k}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


def _require_k(k: int, lo: int = 1):
    if not isinstance(k, int) or k < lo:
        raise ValueError(f"k must be an integer >= {lo}, got {k!r}")


@lru_cache(maxsize=4096)
def _fact(n: int) -> int:
    return factorial(n)


def binom(n: int, r: int) -> int:
    """Binomial coefficient, 0 outside 0 <= r <= n."""
    if r < 0 or n < 0 or r > n:
        return 0
    r = min(r, n - r)
    if r < 64:
        return prod(range(n - r + 1, n + 1)) // _fact(r)
    return _fact(n) // (_fact(r) * _fact(n - r))


# --- Eqs for C1, C2, C3 -------------------------------------------------

C2_TERMS = ((1, 5), (7, 4), (21, 3), (7, 2), (28, 1), (21, 0))  # (coefficient, offset from 2k)
D_TERMS = ((35, 0), (22, 3), (1, 5), (7, 4), (28, 1))


def c1(k: int) -> int:
    _require_k(k)
    m = 4 * k + 2
    return 7 * binom(m, 2 * k) + binom(m, 2 * k + 3)


def c2(k: int) -> int:
    _require_k(k)
    m = 4 * k + 2
    return sum(c * binom(m, 2 * k + off) for c, off in C2_TERMS)


def c3_terms(k: int) -> list[tuple[int, int]]:
    """``(i, binom(4k+9, i))`` for odd i from 2k+7 up to 4k+9, ascending i.

    Walks down from i = 4k+9 by the ratio binom(N, i-2) / binom(N, i).
    """
    _require_k(k)
    N = 4 * k + 9
    out = []
    b = 1
    i = N
    while i >= 2 * k + 7:
        out.append((i, b))
        b = b * i * (i - 1) // ((N - i + 1) * (N - i + 2))
        i -= 2
    return out[::-1]


def c3_sum(k: int) -> int:
    return sum(b for _, b in c3_terms(k))


def a_closed(k: int) -> int:
    """2^(4k+7) - (6k+13)/(2k+5) * binom(4k+7, 2k+3), asserted integral."""
    _require_k(k)
    val = 2 ** (4 * k + 7) - Fraction(6 * k + 13, 2 * k + 5) * binom(4 * k + 7, 2 * k + 3)
    if val.denominator != 1:
        raise CertificateError("integrality of the closed form of C3", k, f"got {val}")
    return val.numerator


def half_gamma_over_sqrt_pi(m: int) -> Fraction:
    """Gamma(m + 1/2) / sqrt(pi), by Gamma(z+1) = z Gamma(z) from Gamma(1/2) = sqrt(pi)."""
    g = Fraction(1)
    for j in range(m):
        g *= Fraction(2 * j + 1, 2)
    return g


def a_from_gamma(k: int) -> Fraction:
    """The Gamma-function form of A, with sqrt(pi) cancelled exactly.

    A = 128 * 16^k * (sqrt(pi) Gamma(2k+6) - (6k+13) Gamma(2k+9/2)) / (sqrt(pi) (2k+5)!)
    """
    _require_k(k, 0)
    g = half_gamma_over_sqrt_pi(2 * k + 4)
    return 128 * 16**k * (_fact(2 * k + 5) - (6 * k + 13) * g) / _fact(2 * k + 5)


def d_val(k: int) -> int:
    """D in its simplified five-term form."""
    _require_k(k)
    m = 4 * k + 2
    return sum(c * binom(m, 2 * k + off) for c, off in D_TERMS)


def e_val(k: int) -> int:
    """E = (6k+13)/(2k+5) * binom(4k+7, 2k+3), asserted integral."""
    _require_k(k)
    val = Fraction(6 * k + 13, 2 * k + 5) * binom(4 * k + 7, 2 * k + 3)
    if val.denominator != 1:
        raise CertificateError("integrality of E", k, f"got {val}")
    return val.numerator


def qk(k: int) -> Fraction:
    """Q_k computed as (C1+C2+C3)/2^(4k+7) and as 1 + (D-E)/2^(4k+7); must agree."""
    _require_k(k)
    scale = 2 ** (4 * k + 7)
    direct = Fraction(c1(k) + c2(k) + c3_sum(k), scale)
    via_de = 1 + Fraction(d_val(k), scale) - Fraction(e_val(k), scale)
    if direct != via_de:
        raise CertificateError("agreement of the two Q_k routes", k, f"{direct} != {via_de}")
    return direct


# --- reports ----------------------------------------------------------------


@dataclass(frozen=True)
class CountReport:
    k: int
    c1: int
    c2: int
    c3: int
    d: int
    e: int
    qk: Fraction
    qk_lt_1: bool
    zero_terms: tuple = ()
    c3_closed_form_ok: bool = True
    routes_agree: bool = True
    d_is_c1_plus_c2: bool = True
    dimension_below_bound: bool = True

    @property
    def n(self) -> int:
        return 4 * self.k + 9

    def to_record(self) -> dict:
        rec = asdict(self)
        rec["qk"] = f"{self.qk.numerator}/{self.qk.denominator}"
        rec["qk_num"] = self.qk.numerator
        rec["qk_den"] = self.qk.denominator
        rec["zero_terms"] = list(self.zero_terms)
        return rec

    @classmethod
    def from_record(cls, rec: dict) -> CountReport:
        def flag(v):
            return v if isinstance(v, bool) else str(v).strip().lower() == "true"

        if "qk_num" in rec:
            q = Fraction(int(rec["qk_num"]), int(rec["qk_den"]))
        else:
            q = Fraction(rec["qk"])
        kw = dict(
            k=int(rec["k"]), c1=int(rec["c1"]), c2=int(rec["c2"]), c3=int(rec["c3"]),
            d=int(rec["d"]), e=int(rec["e"]), qk=q, qk_lt_1=flag(rec["qk_lt_1"]),
        )
        zt = rec.get("zero_terms")
        if zt:
            kw["zero_terms"] = tuple(zt.split(";") if isinstance(zt, str) else zt)
        for name in ("c3_closed_form_ok", "routes_agree", "d_is_c1_plus_c2", "dimension_below_bound"):
            if name in rec:
                kw[name] = flag(rec[name])
        return cls(**kw)


def zero_binomial_terms(k: int) -> tuple[str, ...]:
    """Names of binomial terms in C1/C2/D that vanish by the out-of-range convention."""
    m = 4 * k + 2
    out = []
    for off in sorted({3, 0} | {o for _, o in C2_TERMS} | {o for _, o in D_TERMS}):
        if binom(m, 2 * k + off) == 0:
            out.append(f"binom({m},{2 * k + off})")
    return tuple(out)


def report(k: int) -> CountReport:
    """Everything about one k, with all internal identities asserted."""
    _require_k(k)
    v1, v2, v3 = c1(k), c2(k), c3_sum(k)
    d, e = d_val(k), e_val(k)
    if d != v1 + v2:
        raise CertificateError("D = C1 + C2", k, f"{d} != {v1 + v2}")
    a = a_closed(k)
    if a != v3:
        raise CertificateError("C3 = closed form", k, f"{v3} != {a}")
    scale = 2 ** (4 * k + 7)
    total = v1 + v2 + v3
    if total != scale + d - e:
        raise CertificateError("C1 + C2 + C3 = 2^(4k+7) + D - E", k)
    q = qk(k)
    lt = q < 1
    if lt != (d < e):
        raise CertificateError("Q_k < 1 <=> D < E", k)
    n = 4 * k + 9
    below = 2 ** (n - 1) + total < 3 * 2 ** (n - 2)
    if below != lt:
        raise CertificateError("dimension bound <=> Q_k < 1", k)
    return CountReport(
        k=k, c1=v1, c2=v2, c3=v3, d=d, e=e, qk=q, qk_lt_1=lt,
        zero_terms=zero_binomial_terms(k), dimension_below_bound=below,
    )


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def sweep(k_from: int, k_to: int, workers: int | None = None) -> list[CountReport]:
    """Reports for k_from..k_to inclusive, in ascending k."""
    _require_k(k_from)
    _require_k(k_to)
    if k_from > k_to:
        raise ValueError(f"empty range: {k_from} > {k_to}")
    ks = range(k_from, k_to + 1)
    workers = default_workers() if workers is None else workers
    if workers <= 1 or len(ks) < 2:
        return [report(k) for k in ks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(report, ks, chunksize=max(1, len(ks) // (4 * workers))))


# --- identity certificates ----------------------------------------------


@dataclass
class IdentityReport:
    name: str
    k_values: list = field(default_factory=list)
    lines: list = field(default_factory=list)
    passed: bool = True

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        head = f"[{status}] {self.name}"
        if self.k_values:
            head += f" (k = {self.k_values[0]}..{self.k_values[-1]}, {len(self.k_values)} values)"
        return "\n".join([head] + [f"    {ln}" for ln in self.lines])


def verify_c3_identity(k_max: int) -> IdentityReport:
    """Direct odd-index row sum equals the closed form, for 1 <= k <= k_max."""
    _require_k(k_max)
    rep = IdentityReport("C3 = 2^(4k+7) - (6k+13)/(2k+5) * binom(4k+7, 2k+3)")
    for k in range(1, k_max + 1):
        direct, closed = c3_sum(k), a_closed(k)
        if direct != closed:
            raise CertificateError("C3 closed form", k, f"{direct} != {closed}")
        gamma_form = a_from_gamma(k)
        if gamma_form != closed:
            raise CertificateError("Gamma form of A", k, f"{gamma_form} != {closed}")
        rep.k_values.append(k)
        if k <= 3:
            rep.lines.append(f"k={k}: C3 = A = {closed}")
    return rep


def odd_double_factorial(m: int) -> int:
    """1 * 3 * 5 * ... * (2m+1)."""
    return prod(range(1, 2 * m + 2, 2))


def verify_gamma_identity(k_max: int) -> IdentityReport:
    """Half-integer Gamma expansion, integer side and Gamma side.

    Checks 1*3*...*(4k+7) = (4k+7)! / (2^(2k+3) (2k+3)!) and
    Gamma(2k+9/2)/sqrt(pi) = (4k+7)! / (2^(4k+7) (2k+3)!) for 0 <= k <= k_max.
    """
    _require_k(k_max, 0)
    rep = IdentityReport("Gamma(2k+9/2) = (4k+7)! / (2^(4k+7) (2k+3)!) * sqrt(pi)")
    for k in range(0, k_max + 1):
        lhs = odd_double_factorial(2 * k + 3)
        num, den = _fact(4 * k + 7), 2 ** (2 * k + 3) * _fact(2 * k + 3)
        if num % den or lhs != num // den:
            raise CertificateError("odd double factorial", k, f"{lhs} != {Fraction(num, den)}")
        g = half_gamma_over_sqrt_pi(2 * k + 4)
        if g != Fraction(_fact(4 * k + 7), 2 ** (4 * k + 7) * _fact(2 * k + 3)):
            raise CertificateError("Gamma half-integer expansion", k)
        rep.k_values.append(k)
        if k <= 1:
            rep.lines.append(f"k={k}: {lhs} = {num}/{den}")
    return rep
