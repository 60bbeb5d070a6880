"""Dense univariate integer polynomials in k, and the D'/E' certificates."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from . import counting


class IntPoly:
    """Polynomial with int coefficients, ``coeffs[i]`` multiplying k^i.

    Canonical: no trailing zero coefficients; the zero polynomial has none.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls([c])

    @classmethod
    def linear(cls, a: int, b: int) -> IntPoly:
        """a*k + b."""
        return cls([b, a])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    @staticmethod
    def _lift(x) -> IntPoly:
        if isinstance(x, IntPoly):
            return x
        if isinstance(x, int):
            return IntPoly([x])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coeff(i) + other.coeff(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = IntPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, k):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * k + c
        return acc

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else "k" if i == 1 else f"k^{i}"
            if mono and c == 1:
                t = mono
            elif mono and c == -1:
                t = f"-{mono}"
            else:
                t = f"{c}{'*' if mono else ''}{mono}"
            terms.append(t)
        return " + ".join(terms).replace("+ -", "- ")


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def poly_sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return p - q


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def poly_eval(p: IntPoly, k) -> int:
    return p(k)


def product(factors: Sequence[IntPoly], coefficient: int = 1) -> IntPoly:
    return reduce(lambda a, b: a * b, factors, IntPoly.const(coefficient))


L = IntPoly.linear

# Summands of D' = s(k) * D as (coefficient, [(a, b), ...]) for prod (a k + b).
# The last keeps the repeated (2k+2)(2k+3) factors. The second is
# 22 (2k)(2k+5)(2k+4)(2k+1)(2k+2)(2k+3): scaling 22 binom(4k+2, 2k+3) gives
# 22 * 2k / (2k+3)! * (2k+5)!, so its middle factors are (2k+5)(2k+4).
D_PRIME_SUMMANDS = (
    (35, [(2, 5), (2, 4), (2, 3), (2, 1), (2, 2), (2, 3)]),
    (22, [(2, 0), (2, 5), (2, 4), (2, 1), (2, 2), (2, 3)]),
    (1, [(2, 0), (2, -1), (2, -2), (2, 1), (2, 2), (2, 3)]),
    (7, [(2, 0), (2, -1), (2, 5), (2, 1), (2, 2), (2, 3)]),
    (28, [(2, 5), (2, 4), (2, 3), (2, 2), (2, 3), (2, 2)]),
)
# The same sum with the second summand typeset as 22 (2k)(2k+4)(2k+3)...;
# kept to show it is *not* the scaled D and does not satisfy the factorisation.
D_PRIME_AS_PRINTED = (
    D_PRIME_SUMMANDS[0],
    (22, [(2, 0), (2, 4), (2, 3), (2, 1), (2, 2), (2, 3)]),
) + D_PRIME_SUMMANDS[2:]
E_PRIME_FACTORS = [(6, 13), (4, 7), (4, 6), (4, 5), (4, 4), (4, 3)]
# 24 k (2k+5) (k+2) (k+1) (2k+3)^2
RHS_FACTORS = [(1, 0), (2, 5), (1, 2), (1, 1), (2, 3), (2, 3)]
RHS_COEFFICIENT = 24


def _sum_of_products(summands) -> IntPoly:
    return sum((product([L(a, b) for a, b in fs], c) for c, fs in summands), IntPoly())


def build_d_prime() -> IntPoly:
    return _sum_of_products(D_PRIME_SUMMANDS)


def build_d_prime_as_printed() -> IntPoly:
    return _sum_of_products(D_PRIME_AS_PRINTED)


def build_e_prime() -> IntPoly:
    return product([L(a, b) for a, b in E_PRIME_FACTORS])


def build_rhs_factorization() -> IntPoly:
    return product([L(a, b) for a, b in RHS_FACTORS], RHS_COEFFICIENT)


@dataclass
class FactorizationReport:
    e_prime: IntPoly
    d_prime: IntPoly
    difference: IntPoly
    rhs: IntPoly
    comparisons: list = field(default_factory=list)  # (degree, lhs coeff, rhs coeff)
    passed: bool = True
    printed_gap: IntPoly = field(default_factory=IntPoly)  # typeset D' minus true D'

    def __str__(self):
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] E' - D' = 24k(2k+5)(k+2)(k+1)(2k+3)^2"]
        lines.append(f"    D'        = {self.d_prime}")
        lines.append(f"    E'        = {self.e_prime}")
        lines.append(f"    E' - D'   = {self.difference}")
        for deg, a, b in self.comparisons:
            lines.append(f"    k^{deg}: {a} {'==' if a == b else '!='} {b}")
        lines.append(
            f"    leading: D' {self.d_prime.leading} = 93*2^6, E' {self.e_prime.leading} = 96*2^6"
        )
        if not self.printed_gap.is_zero():
            lines.append(
                "    note: with 22(2k)(2k+4)(2k+3)... as the second summand, D' shifts by "
                f"{self.printed_gap} and the identity fails"
            )
        return "\n".join(lines)


def verify_factorization() -> FactorizationReport:
    """Coefficientwise check of E' - D' against the printed factorisation."""
    d, e = build_d_prime(), build_e_prime()
    diff = e - d
    rhs = build_rhs_factorization()
    size = max(len(diff.coeffs), len(rhs.coeffs), 7)
    comps = [(i, diff.coeff(i), rhs.coeff(i)) for i in range(size)]
    rep = FactorizationReport(e, d, diff, rhs, comps, printed_gap=build_d_prime_as_printed() - d)
    for deg, a, b in comps:
        if a != b:
            rep.passed = False
            raise counting.CertificateError("E' - D' factorisation", None, f"k^{deg}: {a} != {b}")
    if d.leading != 93 * 2**6 or e.leading != 96 * 2**6:
        rep.passed = False
        raise counting.CertificateError(
            "leading terms of D', E'", None, f"got {d.leading}, {e.leading}"
        )
    # every factor of the right-hand side is positive for k >= 1
    if RHS_COEFFICIENT <= 0 or any(a <= 0 or a + b <= 0 for a, b in RHS_FACTORS):
        rep.passed = False
        raise counting.CertificateError("positivity of the factors", None)
    return rep


def scale_factor(k: int) -> Fraction:
    """(2k)!/(4k+2)! * (2k+5)! * (2k+1)(2k+2)(2k+3), the map D -> D'."""
    f = counting._fact
    return Fraction(f(2 * k) * f(2 * k + 5) * (2 * k + 1) * (2 * k + 2) * (2 * k + 3), f(4 * k + 2))


@dataclass
class ScalingReport:
    k_values: list = field(default_factory=list)
    lines: list = field(default_factory=list)
    passed: bool = True

    def __str__(self):
        head = f"[{'PASS' if self.passed else 'FAIL'}] D' = s(k) D, E' = s(k) E, s(k) > 0, D < E"
        if self.k_values:
            head += f" (k = {self.k_values[0]}..{self.k_values[-1]}, {len(self.k_values)} values)"
        return "\n".join([head] + [f"    {ln}" for ln in self.lines])


def verify_scaling_chain(k_samples: Iterable[int]) -> ScalingReport:
    """Tie D', E' back to D, E through the common positive scale factor."""
    d_p, e_p = build_d_prime(), build_e_prime()
    rep = ScalingReport()
    for k in k_samples:
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        s = scale_factor(k)
        if s <= 0:
            raise counting.CertificateError("positivity of the scale factor", k)
        d, e = counting.d_val(k), counting.e_val(k)
        if d * s != d_p(k):
            raise counting.CertificateError("D' = s(k) D", k, f"{d * s} != {d_p(k)}")
        if e * s != e_p(k):
            raise counting.CertificateError("E' = s(k) E", k, f"{e * s} != {e_p(k)}")
        if not d < e:
            raise counting.CertificateError("D < E", k, f"{d} >= {e}")
        rep.k_values.append(k)
        if len(rep.lines) < 3:
            rep.lines.append(f"k={k}: s={s}, D'={d_p(k)}, E'={e_p(k)}, E-D={e - d}")
    return rep
