"""Spans, subalgebra closure, centralizers and maximal-commutativity checks.

Everything is sparse Gaussian elimination over the context's
field, with monomial masks as coordinates. Pivots are the smallest mask of
each basis row, normalised to 1, and eliminated from every other row.
"""
from __future__ import annotations

from typing import Iterable

from .exterior import AlgebraContext, Element, commutator, mul_monomials, multiply
from .verdict import Verdict

MAX_SPAN_RANK = 12
MAX_CENTRALIZER_RANK = 10


class DimensionGuardError(ValueError):
    pass


class NotCommutativeError(ValueError):
    def __init__(self, a: Element, b: Element):
        super().__init__(f"basis elements do not commute: [{a}, {b}] != 0")
        self.pair = (a, b)


class NotClosedError(ValueError):
    def __init__(self, a: Element, b: Element, product: Element):
        super().__init__(f"product of {a} and {b} leaves the subspace: {product}")
        self.pair = (a, b)
        self.product = product


def _guard(ctx: AlgebraContext, limit: int, what: str):
    if ctx.n > limit:
        raise DimensionGuardError(f"{what} refuses n={ctx.n} (limit n <= {limit})")


class _Echelon:
    """Incremental reduced row echelon form over a field, sparse rows."""

    def __init__(self, field):
        self.field = field
        self.p = field.p
        self.rows: dict[int, dict[int, object]] = {}

    def reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        p = self.p
        for q in [q for q in vec if q in self.rows]:
            c = vec.get(q)
            if not c:
                continue
            for m, v in self.rows[q].items():
                s = vec.get(m, 0) - c * v
                if p is not None:
                    s %= p
                if s:
                    vec[m] = s
                else:
                    del vec[m]
        return vec

    def add(self, vec: dict) -> bool:
        """Insert a vector; False if it was already in the span."""
        vec = self.reduce(vec)
        if not vec:
            return False
        q = min(vec)
        inv = self.field.inv(vec[q])
        p = self.p
        if p is None:
            vec = {m: v * inv for m, v in vec.items()}
        else:
            vec = {m: v * inv % p for m, v in vec.items()}
        for row in self.rows.values():
            c = row.get(q)
            if not c:
                continue
            for m, v in vec.items():
                s = row.get(m, 0) - c * v
                if p is not None:
                    s %= p
                if s:
                    row[m] = s
                else:
                    del row[m]
        self.rows[q] = vec
        return True

    def __contains__(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def __len__(self):
        return len(self.rows)


class Subspace:
    """A linear subspace of G(n) with a canonical reduced echelon basis."""

    def __init__(self, ctx: AlgebraContext, echelon: _Echelon):
        self.ctx = ctx
        self._ech = echelon
        self.basis = tuple(Element._raw(ctx, dict(echelon.rows[q])) for q in sorted(echelon.rows))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return sorted(self._ech.rows)

    def reduce(self, e: Element) -> Element:
        if e.ctx != self.ctx:
            raise ValueError("element from a different context")
        return Element._raw(self.ctx, self._ech.reduce(e._terms))

    def __contains__(self, e: Element) -> bool:
        return not self.reduce(e)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(b in self for b in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ctx == other.ctx and self.basis == other.basis

    def __hash__(self):
        return hash((self.ctx, self.basis))

    def __repr__(self):
        return f"Subspace(n={self.ctx.n}, field={self.ctx.field}, dim={self.dim})"


def span(elems: Iterable[Element], ctx: AlgebraContext) -> Subspace:
    _guard(ctx, MAX_SPAN_RANK, "span")
    ech = _Echelon(ctx.field)
    for e in elems:
        if e.ctx != ctx:
            raise ValueError(f"element from context {e.ctx}, expected {ctx}")
        ech.add(e._terms)
    return Subspace(ctx, ech)


def monomial_span(masks: Iterable[int], ctx: AlgebraContext) -> Subspace:
    return span([Element(ctx, {m: 1}) for m in masks], ctx)


def subalgebra_closure(gens: Iterable[Element], ctx: AlgebraContext, include_unit: bool = True) -> Subspace:
    """Smallest subalgebra (unital when flagged) containing the generators."""
    _guard(ctx, MAX_CENTRALIZER_RANK, "subalgebra_closure")
    gens = list(gens)
    if include_unit:
        gens.append(ctx.one())
    sub = span(gens, ctx)
    while True:
        ech = sub._ech
        grew = False
        for a in sub.basis:
            for b in sub.basis:
                if ech.add(multiply(a, b)._terms):
                    grew = True
        sub = Subspace(ctx, ech)
        if not grew:
            return sub


def centralizer_of(sub: Subspace) -> Subspace:
    """All v in G(n) with [v, b] = 0 for every basis vector b of ``sub``."""
    ctx = sub.ctx
    _guard(ctx, MAX_CENTRALIZER_RANK, "centralizer_of")
    f = ctx.field
    p = f.p
    constraints = _Echelon(f)
    for b in sub.basis:
        # rows[U][T] = coefficient of x_U in [x_T, b]
        rows: dict[int, dict[int, object]] = {}
        for t in range(ctx.dim):
            for s, c in b._terms.items():
                sg1, m1 = mul_monomials(t, s)
                if not sg1:
                    continue
                sg2, _ = mul_monomials(s, t)
                d = sg1 - sg2
                if not d:
                    continue
                row = rows.setdefault(m1, {})
                row[t] = row.get(t, 0) + d * c
        for row in rows.values():
            if p is not None:
                row = {t: v % p for t, v in row.items()}
            row = {t: v for t, v in row.items() if v}
            if row:
                constraints.add(row)
    null = _Echelon(f)
    pivots = constraints.rows
    for free in range(ctx.dim):
        if free in pivots:
            continue
        vec = {free: f(1)}
        for q, row in pivots.items():
            c = row.get(free)
            if c:
                vec[q] = f(-c)
        null.add(vec)
    return Subspace(ctx, null)


def check_commutative(sub: Subspace) -> None:
    basis = sub.basis
    for i, a in enumerate(basis):
        for b in basis[i + 1:]:
            if commutator(a, b):
                raise NotCommutativeError(a, b)


def check_closed(sub: Subspace) -> None:
    for a in sub.basis:
        for b in sub.basis:
            prod = multiply(a, b)
            if prod not in sub:
                raise NotClosedError(a, b, prod)


def is_maximal_commutative(sub: Subspace) -> Verdict:
    """Maximal commutative iff the subalgebra equals its own centralizer.

    Raises NotCommutativeError / NotClosedError when the input is not a
    commutative subalgebra. A negative verdict carries an element of
    Cent(A) outside A: the highest-pivot centralizer basis vector not in A,
    reduced modulo A.
    """
    _guard(sub.ctx, MAX_CENTRALIZER_RANK, "is_maximal_commutative")
    check_commutative(sub)
    check_closed(sub)
    cent = centralizer_of(sub)
    if cent.dim == sub.dim:
        return Verdict.yes()
    for v in reversed(cent.basis):
        r = sub.reduce(v)
        if r:
            return Verdict.no(r)
    raise AssertionError("centralizer larger than subalgebra but contained in it")
