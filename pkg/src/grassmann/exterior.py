"""Exact arithmetic in the Grassmann algebra G(n).

Basis monomials x_S are stored as n-bit integer masks: bit i set means the
generator x_{i+1} occurs in the product, generators always kept in
increasing index order. Elements are sparse maps mask -> nonzero scalar.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

MAX_RANK = 30


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Scalar field: the rationals (``p=None``) or GF(p) for an odd prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is None:
            return
        if self.p == 2:
            raise ValueError("characteristic 2 is not allowed: generators would commute")
        if not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): modulus must be an odd prime")

    @property
    def name(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    def __call__(self, x):
        """Coerce an int or Fraction into the field."""
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(x)
        return pow(x, -1, self.p)

    def __repr__(self):
        return self.name


QQ = Field()
GF3 = Field(3)


@dataclass(frozen=True)
class AlgebraContext:
    n: int
    field: Field = QQ

    def __post_init__(self):
        if not 1 <= self.n <= MAX_RANK:
            raise ValueError(f"rank n={self.n} outside 1..{MAX_RANK}")
        if not isinstance(self.field, Field):
            raise TypeError("field must be a Field instance")

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def top(self) -> int:
        """Mask of the top monomial x_1 x_2 ... x_n."""
        return (1 << self.n) - 1

    def check_mask(self, mask: int) -> int:
        if not 0 <= mask < (1 << self.n):
            raise ValueError(f"mask {mask} is not a monomial of G({self.n})")
        return mask

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {0: 1})

    def gen(self, i: int) -> Element:
        """The generator x_i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} outside 1..{self.n}")
        return Element(self, {1 << (i - 1): 1})

    def monomial(self, *indices: int) -> Element:
        """x_{i1} x_{i2} ... in the order given (the sign is applied)."""
        out = self.one()
        for i in indices:
            out = out * self.gen(i)
        return out

    def basis(self) -> range:
        return range(1 << self.n)


def mask_of(*indices: int) -> int:
    """Mask of the set {i1, i2, ...} of 1-based generator indices."""
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def mul_monomials(a: int, b: int, ctx: AlgebraContext | None = None) -> tuple[int, int | None]:
    """Product x_a * x_b as ``(sign, mask)``; ``(0, None)`` when it vanishes.

    The sign is (-1)^inv, inv counting pairs (i in a, j in b) with i > j.
    """
    if ctx is not None:
        ctx.check_mask(a)
        ctx.check_mask(b)
    if a & b:
        return 0, None
    inv = 0
    rest = a
    while rest:
        low = rest & -rest
        inv += popcount(b & (low - 1))
        rest ^= low
    return (-1 if inv & 1 else 1), a | b


class Element:
    """Immutable element of G(n) in canonical sparse form."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: AlgebraContext, terms: Mapping[int, object] | Iterable = ()):
        f = ctx.field
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mask, c in items:
            ctx.check_mask(mask)
            c = f(c)
            if c:
                clean[mask] = c
        self.ctx = ctx
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        # terms already coerced and zero-free
        self = object.__new__(cls)
        self.ctx = ctx
        self._terms = terms
        self._hash = None
        return self

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def support(self) -> list[int]:
        return sorted(self._terms)

    def coeff(self, mask: int):
        return self._terms.get(mask, self.ctx.field(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _check(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.ctx != self.ctx:
            raise ValueError(f"mixed contexts: {self.ctx} vs {other.ctx}")
        return other

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if self.ctx.field.p is not None:
                s %= self.ctx.field.p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Element._raw(self.ctx, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> Element:
        c = self.ctx.field(c)
        if not c:
            return self.ctx.zero()
        p = self.ctx.field.p
        if p is None:
            return Element._raw(self.ctx, {m: v * c for m, v in self._terms.items()})
        return Element._raw(self.ctx, {m: v * c % p for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            mono = "*".join(f"x{i}" for i in indices_of(m)) or "1"
            parts.append(mono if c == 1 and m else f"{c}*{mono}" if m else f"{c}")
        return " + ".join(parts)


def multiply(a: Element, b: Element, ctx: AlgebraContext | None = None) -> Element:
    ctx = ctx or a.ctx
    if a.ctx != ctx or b.ctx != ctx:
        raise ValueError("operands live in different algebra contexts")
    p = ctx.field.p
    out: dict[int, object] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            sign, m = mul_monomials(ma, mb)
            if not sign:
                continue
            out[m] = out.get(m, 0) + (ca * cb if sign > 0 else -ca * cb)
    if p is not None:
        out = {m: c % p for m, c in out.items()}
    return Element._raw(ctx, {m: c for m, c in out.items() if c})


def commutator(a: Element, b: Element, ctx: AlgebraContext | None = None) -> Element:
    """ab - ba."""
    return multiply(a, b, ctx) - multiply(b, a, ctx)


def even_part_basis(ctx: AlgebraContext) -> list[int]:
    """Masks of all even-degree monomials, ascending (2^(n-1) of them)."""
    return [m for m in range(1 << ctx.n) if not popcount(m) & 1]


def odd_part_basis(ctx: AlgebraContext) -> list[int]:
    return [m for m in range(1 << ctx.n) if popcount(m) & 1]
