"""Slow, obviously-correct reference implementations used only by tests."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def word_sort_sign(a: int, b: int) -> tuple[int, int | None]:
    """Concatenate generator words of a and b and bubble-sort them,
    counting transpositions; a repeated generator kills the product."""
    word = [i for i in range(a.bit_length()) if a >> i & 1]
    word += [i for i in range(b.bit_length()) if b >> i & 1]
    if len(set(word)) < len(word):
        return 0, None
    swaps = 0
    w = list(word)
    for i in range(len(w)):
        for j in range(len(w) - 1 - i):
            if w[j] > w[j + 1]:
                w[j], w[j + 1] = w[j + 1], w[j]
                swaps += 1
    mask = 0
    for g in w:
        mask |= 1 << g
    return (-1) ** swaps, mask


_pascal_rows = [[1]]


def pascal(n: int, r: int) -> int:
    if r < 0 or r > n:
        return 0
    while len(_pascal_rows) <= n:
        prev = _pascal_rows[-1]
        _pascal_rows.append([1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1])
    return _pascal_rows[n][r]


def odd_masks(n):
    return [m for m in range(1 << n) if bin(m).count("1") % 2]


def is_intersecting(members) -> bool:
    return all(a & b for a, b in combinations(members, 2))


def maximal_families_brute(n: int) -> list[frozenset]:
    """Every subset of the odd masks, filtered to intersecting and maximal."""
    odds = odd_masks(n)
    out = []
    for bits in range(1 << len(odds)):
        fam = [odds[i] for i in range(len(odds)) if bits >> i & 1]
        if not is_intersecting(fam):
            continue
        addable = [t for t in odds if t not in fam and all(t & s for s in fam)]
        if not addable:
            out.append(frozenset(fam))
    return out


def dense_commutes(ctx, v_mask: int, b_terms: dict) -> bool:
    """Does monomial x_v commute with sum b_terms? Computed with the word oracle."""
    acc: dict[int, Fraction] = {}
    for s, c in b_terms.items():
        s1, m1 = word_sort_sign(v_mask, s)
        s2, m2 = word_sort_sign(s, v_mask)
        if s1:
            acc[m1] = acc.get(m1, 0) + s1 * c
        if s2:
            acc[m2] = acc.get(m2, 0) - s2 * c
    return not any(acc.values())


def monomial_centralizer(ctx, masks) -> set[int]:
    """Monomials commuting with every monomial in ``masks``.

    For spans of monomials, the centralizer is spanned by monomials, since
    [x_T, x_S] is a multiple of the single monomial x_{T|S}, distinct for
    distinct T with the same S.
    """
    return {
        v for v in range(1 << ctx.n)
        if all(dense_commutes(ctx, v, {s: 1}) for s in masks)
    }
