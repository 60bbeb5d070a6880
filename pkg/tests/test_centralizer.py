import random

import pytest

from grassmann.centralizer import (
    DimensionGuardError,
    NotClosedError,
    NotCommutativeError,
    centralizer_of,
    is_maximal_commutative,
    monomial_span,
    span,
    subalgebra_closure,
)
from grassmann.exterior import GF3, AlgebraContext, Element, even_part_basis, mask_of, popcount
from oracles import monomial_centralizer


def mono(ctx, *idx):
    return Element(ctx, {mask_of(*idx): 1})


class TestSpan:
    def test_dependent(self):
        c = AlgebraContext(3)
        assert span([c.gen(1), 2 * c.gen(1)], c).dim == 1

    def test_empty(self):
        assert span([], AlgebraContext(3)).dim == 0

    def test_full(self):
        c = AlgebraContext(3)
        assert monomial_span(range(8), c).dim == 8

    def test_echelon_canonical(self):
        c = AlgebraContext(3)
        a = span([c.gen(1) + c.gen(2), c.gen(1) - c.gen(2)], c)
        b = span([c.gen(2), c.gen(1)], c)
        assert a == b
        pivots = a.pivots()
        for v, q in zip(a.basis, pivots):
            assert v.coeff(q) == 1
            assert all(v.coeff(other) == 0 for other in pivots if other != q)

    def test_context_mismatch(self):
        with pytest.raises(ValueError):
            span([AlgebraContext(2).gen(1)], AlgebraContext(3))

    def test_guard(self):
        with pytest.raises(DimensionGuardError):
            span([], AlgebraContext(13))


class TestClosure:
    def test_single_generator(self):
        c = AlgebraContext(3)
        sub = subalgebra_closure([c.gen(1)], c)
        assert sub == span([c.one(), c.gen(1)], c)

    def test_mixed_degree_generator(self):
        c = AlgebraContext(3)
        g = c.gen(1) + mono(c, 2, 3)
        # oracle: repeated multiplication until the span stops growing
        elems = [c.one(), g]
        while True:
            before = span(elems, c).dim
            elems += [a * b for a in elems for b in elems]
            if span(elems, c).dim == before:
                break
        sub = subalgebra_closure([g], c)
        assert sub.dim == 3 == before
        for e in (c.one(), g, mono(c, 1, 2, 3)):
            assert e in sub

    def test_unit_only(self):
        c = AlgebraContext(3)
        assert subalgebra_closure([], c).dim == 1
        assert subalgebra_closure([], c, include_unit=False).dim == 0


class TestCentralizer:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_of_unit(self, n):
        c = AlgebraContext(n)
        assert centralizer_of(span([c.one()], c)).dim == 2**n

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_centre(self, n):
        c = AlgebraContext(n)
        cent = centralizer_of(monomial_span(range(2**n), c))
        expected = monomial_centralizer(c, range(2**n))
        assert cent == monomial_span(expected, c)
        assert cent.dim == (5 if n == 3 else 8 if n == 4 else 17)
        odd_central = {m for m in expected if popcount(m) % 2}
        assert odd_central == ({c.top} if n % 2 else set())

    def test_non_monomial_input(self):
        c = AlgebraContext(3)
        sub = subalgebra_closure([c.gen(1) + c.gen(2)], c)
        cent = centralizer_of(sub)
        assert cent.contains_subspace(sub)
        # x1 + x2 commutes with v iff v's odd part times (x1 + x2) vanishes
        assert mono(c, 1) not in cent
        assert (c.gen(1) + c.gen(2)) in cent
        assert mono(c, 1, 2, 3) in cent

    def test_gf3_matches_rationals(self):
        for field in (None, GF3):
            c = AlgebraContext(4, field) if field else AlgebraContext(4)
            sub = monomial_span([0, 1, 3, 5], c)
            assert centralizer_of(sub).dim == 8 + 4


class TestMaximal:
    def test_star_n4(self):
        c = AlgebraContext(4)
        star = [m for m in range(16) if popcount(m) % 2 and m & 1]
        sub = monomial_span(even_part_basis(c) + star, c)
        # oracle: no monomial outside commutes with everything inside
        cent = monomial_centralizer(c, even_part_basis(c) + star)
        assert cent == set(even_part_basis(c) + star)
        assert sub.dim == 12
        assert is_maximal_commutative(sub)

    def test_unit_in_g2(self):
        c = AlgebraContext(2)
        v = is_maximal_commutative(span([c.one()], c))
        assert not v
        assert v.witness in centralizer_of(span([c.one()], c))
        assert v.witness == mono(c, 1, 2)

    def test_even_part_g3(self):
        c = AlgebraContext(3)
        v = is_maximal_commutative(monomial_span(even_part_basis(c), c))
        assert not v
        assert v.witness == mono(c, 1, 2, 3)

    def test_not_commutative(self):
        c = AlgebraContext(2)
        with pytest.raises(NotCommutativeError) as exc:
            is_maximal_commutative(monomial_span([0, 1, 2, 3], c))
        a, b = exc.value.pair
        assert (a * b - b * a)

    def test_not_closed(self):
        c = AlgebraContext(3)
        with pytest.raises(NotClosedError):
            is_maximal_commutative(monomial_span([0, 1, 6], c))


def monomial_subalgebras(n):
    """Unital, closed, commutative sets of monomials, by exhaustive search."""
    N = 1 << n
    out = []
    for bits in range(1 << (N - 1)):
        S = [0] + [m for m in range(1, N) if bits >> (m - 1) & 1]
        s = set(S)
        ok = True
        for a in S:
            for b in S:
                if a & b:
                    continue
                if (a | b) not in s or (a != b and popcount(a) % 2 and popcount(b) % 2):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(S)
    return out


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_field_independence_exhaustive(n):
    for S in monomial_subalgebras(n):
        q = is_maximal_commutative(monomial_span(S, AlgebraContext(n)))
        g = is_maximal_commutative(monomial_span(S, AlgebraContext(n, GF3)))
        assert bool(q) == bool(g), S
        expected = monomial_centralizer(AlgebraContext(n), S) == set(S)
        assert bool(q) == expected


def random_subalgebra(rng, n, field=None):
    c = AlgebraContext(n, field) if field else AlgebraContext(n)
    gens = []
    for _ in range(rng.randint(1, 3)):
        gens.append(Element(c, {rng.randrange(1, 1 << n): rng.randint(-2, 2) for _ in range(rng.randint(1, 3))}))
    return subalgebra_closure(gens, c)


def test_centralizer_laws_random():
    rng = random.Random(2024)
    checked = 0
    for _ in range(60):
        sub = random_subalgebra(rng, rng.randint(2, 5))
        cent = centralizer_of(sub)
        cc = centralizer_of(cent)
        assert cc.contains_subspace(sub)
        if all(not (a * b - b * a) for a in sub.basis for b in sub.basis):
            assert cent.contains_subspace(sub)
            assert cent.contains_subspace(cc)
            checked += 1
    assert checked > 10


def test_witness_extends_commutative_subalgebra():
    rng = random.Random(5)
    for _ in range(40):
        sub = random_subalgebra(rng, 4)
        try:
            v = is_maximal_commutative(sub)
        except NotCommutativeError:
            continue
        if v:
            continue
        bigger = subalgebra_closure(list(sub.basis) + [v.witness], sub.ctx)
        assert bigger.dim > sub.dim
        assert all(not (a * b - b * a) for a in bigger.basis for b in bigger.basis)
