"""Intersecting families of odd subsets of [n] and their subalgebras.

Two odd-degree monomials of G(n) commute exactly when their supports meet:
overlapping supports kill both products, disjoint odd blocks anticommute.
Even monomials are central. So even part + span{x_S : S in F} is a
commutative subspace precisely when F is an intersecting family.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

import networkx as nx
import numpy as np

from .centralizer import (
    NotClosedError,
    NotCommutativeError,
    Subspace,
    is_maximal_commutative,
    monomial_span,
)
from .exterior import QQ, AlgebraContext, Field, even_part_basis, popcount
from .verdict import Verdict

MAX_FAST_N = 26
MAX_ENUMERATE_N = 5


class FamilyError(ValueError):
    pass


class FamilyFormatError(FamilyError):
    def __init__(self, msg: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno is not None else msg)


@dataclass(frozen=True)
class OddFamily:
    n: int
    members: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise FamilyError(f"ground set size must be positive, got {self.n}")
        object.__setattr__(self, "members", frozenset(self.members))
        limit = 1 << self.n
        for m in self.members:
            if not 0 <= m < limit:
                raise FamilyError(f"mask {m} is not a subset of [{self.n}]")
            if not popcount(m) & 1:
                raise FamilyError(f"mask {m} has even size {popcount(m)}")

    @classmethod
    def of_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> OddFamily:
        """Build from 1-based element lists, e.g. ``of_sets(3, [[1], [1, 2, 3]])``."""
        members = set()
        for s in sets:
            m = 0
            for i in s:
                m |= 1 << (i - 1)
            members.add(m)
        return cls(n, frozenset(members))

    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, mask):
        return mask in self.members

    def __iter__(self):
        return iter(self.sorted_members())

    def with_members(self, extra: Iterable[int]) -> OddFamily:
        return OddFamily(self.n, self.members | frozenset(extra))


def odd_masks(n: int) -> list[int]:
    return [m for m in range(1 << n) if popcount(m) & 1]


def star(n: int, element: int = 1) -> OddFamily:
    """All odd subsets of [n] containing ``element``."""
    bit = 1 << (element - 1)
    return OddFamily(n, frozenset(m for m in odd_masks(n) if m & bit))


def is_intersecting(F: OddFamily) -> Verdict:
    members = F.sorted_members()
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if not a & b:
                return Verdict.no((a, b))
    return Verdict.yes()


def _require_intersecting(F: OddFamily):
    v = is_intersecting(F)
    if not v:
        a, b = v.witness
        raise FamilyError(f"family is not intersecting: {a} and {b} are disjoint")


def addable_masks_naive(F: OddFamily) -> list[int]:
    members = F.sorted_members()
    return [t for t in odd_masks(F.n) if t not in F.members and all(t & s for s in members)]


def is_maximal_family_naive(F: OddFamily) -> Verdict:
    """Scan every odd mask; the smallest addable one is the witness."""
    _require_intersecting(F)
    members = F.sorted_members()
    for t in odd_masks(F.n):
        if t not in F.members and all(t & s for s in members):
            return Verdict.no(t)
    return Verdict.yes()


def superset_reach(F: OddFamily) -> np.ndarray:
    """reach[U] is True iff some member of F is a subset of U."""
    if F.n > MAX_FAST_N:
        raise FamilyError(f"zeta table for n={F.n} exceeds the n <= {MAX_FAST_N} guard")
    size = 1 << F.n
    reach = np.zeros(size, dtype=bool)
    if F.members:
        reach[np.fromiter(F.members, dtype=np.int64)] = True
    for i in range(F.n):
        half = 1 << i
        view = reach.reshape(-1, 2, half)
        view[:, 1, :] |= view[:, 0, :]
    return reach


def _odd_parity_table(n: int) -> np.ndarray:
    par = np.zeros(1, dtype=bool)
    for _ in range(n):
        par = np.concatenate([par, ~par])
    return par


def addable_masks_fast(F: OddFamily, reach: np.ndarray | None = None) -> np.ndarray:
    """Odd T not in F whose complement contains no member (so T meets all)."""
    if reach is None:
        reach = superset_reach(F)
    size = 1 << F.n
    idx = np.arange(size, dtype=np.int64)
    ok = _odd_parity_table(F.n) & ~reach[(size - 1) ^ idx]
    if F.members:
        ok[np.fromiter(F.members, dtype=np.int64)] = False
    return np.flatnonzero(ok)


def is_maximal_family_fast(F: OddFamily) -> Verdict:
    reach = superset_reach(F)
    full = (1 << F.n) - 1
    members = np.fromiter(F.members, dtype=np.int64, count=len(F.members))
    # F is intersecting iff no member's complement contains a member
    if members.size and reach[full ^ members].any():
        _require_intersecting(F)
    addable = addable_masks_fast(F, reach)
    if addable.size:
        return Verdict.no(int(addable[0]))
    return Verdict.yes()


is_maximal_family = is_maximal_family_fast


def complete_family(F: OddFamily) -> OddFamily:
    """Greedy maximal superfamily, admitting addable masks in ascending order.

    One ascending pass suffices: a rejected mask misses some member that
    stays in the family.
    """
    _require_intersecting(F)
    members = F.sorted_members()
    added = []
    for t in odd_masks(F.n):
        if t in F.members:
            continue
        if all(t & s for s in members):
            members.append(t)
            added.append(t)
    return F.with_members(added)


def _family_order(F: OddFamily):
    return (len(F), F.sorted_members())


def enumerate_maximal_families(n: int) -> list[OddFamily]:
    """All maximal intersecting odd families of [n] (n <= 5).

    These are the maximal cliques of the graph on odd masks joined when
    they intersect. Ordered by size, then by sorted member list.
    """
    if not 1 <= n <= MAX_ENUMERATE_N:
        raise FamilyError(f"enumeration needs 1 <= n <= {MAX_ENUMERATE_N}, got {n}")
    verts = odd_masks(n)
    g = nx.Graph()
    g.add_nodes_from(verts)
    g.add_edges_from((a, b) for i, a in enumerate(verts) for b in verts[i + 1:] if a & b)
    fams = {OddFamily(n, frozenset(c)) for c in nx.find_cliques(g)}
    return sorted(fams, key=_family_order)


def family_to_subalgebra(F: OddFamily, ctx: AlgebraContext | None = None) -> Subspace:
    """span(even monomials + x_S for S in F); dimension 2^(n-1) + |F|."""
    ctx = ctx or AlgebraContext(F.n)
    if ctx.n != F.n:
        raise FamilyError(f"family on [{F.n}] does not fit G({ctx.n})")
    return monomial_span(even_part_basis(ctx) + F.sorted_members(), ctx)


def certify_family(F: OddFamily, field: Field = QQ) -> Verdict:
    """Algebraic maximality of the subalgebra attached to F.

    Non-commutative or non-closed spans are reported as a negative verdict
    whose witness is the offending exception, since neither can be a
    maximal commutative subalgebra.
    """
    sub = family_to_subalgebra(F, AlgebraContext(F.n, field))
    try:
        return is_maximal_commutative(sub)
    except (NotCommutativeError, NotClosedError) as exc:
        return Verdict.no(exc)


def parse_family(text: str) -> OddFamily:
    n = None
    seen: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            key, sep, val = line.partition("=")
            if not sep or key.strip() != "n":
                raise FamilyFormatError("first entry must be 'n=<decimal>'", lineno)
            try:
                n = int(val.strip())
            except ValueError:
                raise FamilyFormatError(f"bad rank {val.strip()!r}", lineno) from None
            if n < 1:
                raise FamilyFormatError(f"rank must be positive, got {n}", lineno)
            continue
        try:
            mask = int(line, 10)
        except ValueError:
            raise FamilyFormatError(f"not a decimal mask: {line!r}", lineno) from None
        if not 0 <= mask < (1 << n):
            raise FamilyFormatError(f"mask {mask} out of range for n={n}", lineno)
        if not popcount(mask) & 1:
            raise FamilyFormatError(f"mask {mask} has even size {popcount(mask)}", lineno)
        if mask in seen:
            raise FamilyFormatError(f"duplicate mask {mask} (first on line {seen[mask]})", lineno)
        seen[mask] = lineno
    if n is None:
        raise FamilyFormatError("missing 'n=<decimal>' header")
    return OddFamily(n, frozenset(seen))


def format_family(F: OddFamily, comment: str | None = None) -> str:
    lines = [f"n={F.n}"]
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines += [str(m) for m in F.sorted_members()]
    return "\n".join(lines) + "\n"


def read_family(path: str | os.PathLike) -> OddFamily:
    with open(path) as fh:
        return parse_family(fh.read())


def write_family(F: OddFamily, path: str | os.PathLike, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_family(F, comment))
