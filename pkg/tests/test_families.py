import random
from itertools import combinations

import pytest

from grassmann.exterior import AlgebraContext, Element, commutator
from grassmann.families import (
    FamilyError,
    FamilyFormatError,
    OddFamily,
    certify_family,
    complete_family,
    enumerate_maximal_families,
    family_to_subalgebra,
    format_family,
    is_intersecting,
    is_maximal_family_fast,
    is_maximal_family_naive,
    odd_masks,
    parse_family,
    read_family,
    star,
    write_family,
)
from oracles import maximal_families_brute


def fam(n, *sets):
    return OddFamily.of_sets(n, sets)


def all_families(n):
    odds = odd_masks(n)
    for bits in range(1 << len(odds)):
        yield OddFamily(n, frozenset(odds[i] for i in range(len(odds)) if bits >> i & 1))


class TestOddFamily:
    def test_even_member_rejected(self):
        with pytest.raises(FamilyError):
            OddFamily(3, frozenset({3}))

    def test_out_of_range(self):
        with pytest.raises(FamilyError):
            OddFamily(3, frozenset({8}))


class TestIntersecting:
    def test_yes(self):
        assert is_intersecting(fam(3, [1], [1, 2, 3]))

    def test_no_with_witness(self):
        v = is_intersecting(fam(3, [1], [2]))
        assert not v
        assert set(v.witness) == {0b001, 0b010}

    def test_large_odd_layers_k2(self):
        # sizes 11, 13, 15, 17 inside [17]: 11 + 11 > 17 forces overlap
        k = 2
        n = 4 * k + 9
        rng = random.Random(11)
        members = set()
        while len(members) < 300:
            size = rng.choice(range(2 * k + 7, n + 1, 2))
            members.add(sum(1 << i for i in rng.sample(range(n), size)))
        F = OddFamily(n, frozenset(members))
        assert all(a & b for a, b in combinations(members, 2))
        assert is_intersecting(F)


class TestMaximality:
    cases = [
        (fam(3, [1, 2, 3]), False),
        (fam(3, [1], [1, 2, 3]), True),
        (fam(4, [1], [1, 2, 3], [1, 2, 4], [1, 3, 4]), True),
        (OddFamily(3, frozenset()), False),
    ]

    @pytest.mark.parametrize("F,expected", cases)
    def test_naive(self, F, expected):
        assert bool(is_maximal_family_naive(F)) == expected

    @pytest.mark.parametrize("F,expected", cases)
    def test_fast_identical(self, F, expected):
        assert is_maximal_family_fast(F) == is_maximal_family_naive(F)

    def test_witness_singleton(self):
        v = is_maximal_family_naive(fam(3, [1, 2, 3]))
        assert v.witness in (0b001, 0b010, 0b100)

    def test_not_intersecting_errors(self):
        for check in (is_maximal_family_naive, is_maximal_family_fast, complete_family):
            with pytest.raises(FamilyError):
                check(fam(3, [1], [2]))

    def test_star_n10(self):
        F = star(10)
        assert len(F) == 2**8
        assert is_maximal_family_fast(F)
        assert is_maximal_family_naive(F)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_fast_naive_exhaustive(self, n):
        for F in all_families(n):
            if not is_intersecting(F):
                continue
            assert is_maximal_family_fast(F) == is_maximal_family_naive(F)

    def test_fast_guard(self):
        with pytest.raises(FamilyError):
            is_maximal_family_fast(OddFamily(27, frozenset({1})))


def random_intersecting(rng, n, tries=40):
    members = []
    odds = odd_masks(n)
    for _ in range(tries):
        t = rng.choice(odds)
        if t not in members and all(t & s for s in members):
            members.append(t)
    return OddFamily(n, frozenset(members))


class TestCompletion:
    def test_empty_n3(self):
        G = complete_family(OddFamily(3, frozenset()))
        assert G == fam(3, [1], [1, 2, 3])
        assert is_maximal_family_naive(G)

    def test_fixpoint(self):
        F = star(5, 2)
        assert complete_family(F) == F

    def test_triple_n4(self):
        G = complete_family(fam(4, [1, 2, 3]))
        assert len(G) == 4
        assert G in enumerate_maximal_families(4)

    def test_random_n10(self):
        rng = random.Random(10)
        for _ in range(100):
            F = random_intersecting(rng, 10)
            G = complete_family(F)
            assert F.members <= G.members
            assert is_maximal_family_fast(G)
            assert is_maximal_family_naive(G)
            assert is_maximal_family_fast(F) == is_maximal_family_naive(F)


class TestEnumeration:
    def test_n1(self):
        assert enumerate_maximal_families(1) == [OddFamily(1, frozenset({1}))]

    def test_n3(self):
        got = enumerate_maximal_families(3)
        assert set(got) == {fam(3, [i], [1, 2, 3]) for i in (1, 2, 3)}
        assert all(len(F) == 2 for F in got)

    def test_n4_all_size_four(self):
        got = enumerate_maximal_families(4)
        assert {len(F) for F in got} == {4}

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_brute_force(self, n):
        got = enumerate_maximal_families(n)
        assert {F.members for F in got} == set(maximal_families_brute(n))
        assert len(got) == len(set(got))

    def test_deterministic(self):
        assert enumerate_maximal_families(5) == enumerate_maximal_families(5)

    def test_guard(self):
        with pytest.raises(FamilyError):
            enumerate_maximal_families(6)


class TestBridge:
    def test_dim_examples(self):
        assert family_to_subalgebra(fam(3, [1], [1, 2, 3])).dim == 6
        assert family_to_subalgebra(star(4)).dim == 12
        assert family_to_subalgebra(OddFamily(5, frozenset())).dim == 16

    def test_context_mismatch(self):
        with pytest.raises(FamilyError):
            family_to_subalgebra(star(3), AlgebraContext(4))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_odd_commutation_rule(self, n):
        # odd monomials commute iff supports meet, checked against algebra
        ctx = AlgebraContext(n)
        odds = odd_masks(n)
        for a in odds:
            for b in odds:
                comm = commutator(Element(ctx, {a: 1}), Element(ctx, {b: 1}))
                assert comm.is_zero() == bool(a & b)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_equivalence_exhaustive(self, n):
        for F in all_families(n):
            assert family_to_subalgebra(F).dim == 2 ** (n - 1) + len(F)
            comb = bool(is_intersecting(F)) and bool(is_maximal_family_naive(F))
            assert bool(certify_family(F)) == comb

    @pytest.mark.parametrize("n", range(2, 13))
    def test_star_size(self, n):
        F = star(n, n // 2 + 1)
        assert len(F) == 2 ** (n - 2)
        assert is_maximal_family_fast(F)


class TestFileFormat:
    def test_round_trip(self, tmp_path):
        F = star(5, 3)
        p = tmp_path / "s.fam"
        write_family(F, p, comment="star of 3")
        assert read_family(p) == F

    def test_comments_and_blanks(self):
        F = parse_family("# header\nn=3  # rank\n\n1\n7 # top\n")
        assert F == fam(3, [1], [1, 2, 3])

    @pytest.mark.parametrize(
        "text,lineno",
        [
            ("n=3\n1\n3\n", 3),  # even size
            ("n=3\n1\n1\n", 3),  # duplicate
            ("n=3\n1\n9\n", 3),  # out of range
            ("n=3\nabc\n", 2),
            ("3\n1\n", 1),
        ],
    )
    def test_errors_carry_line_numbers(self, text, lineno):
        with pytest.raises(FamilyFormatError) as exc:
            parse_family(text)
        assert exc.value.lineno == lineno
        assert f"line {lineno}" in str(exc.value)

    def test_missing_header(self):
        with pytest.raises(FamilyFormatError):
            parse_family("# nothing\n")

    def test_format_sorted(self):
        text = format_family(OddFamily(3, frozenset({7, 1})))
        assert text == "n=3\n1\n7\n"


def test_completion_members_upward_closed():
    # a maximal intersecting odd family contains every odd superset of its members
    rng = random.Random(3)
    for _ in range(30):
        G = complete_family(random_intersecting(rng, 7))
        for s in G.members:
            for t in odd_masks(7):
                if t & s == s:
                    assert t in G
