from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from fubini.qseries import QPoly, q_factorial, q_stirling
from fubini.words import (
    Perm,
    Word,
    bar_growth,
    convexify,
    dimension_stat,
    enumerate_fubini,
    enumerate_tail,
    enumerate_words_s,
    generalized_dimension,
    in_wnk,
    initial_positions,
    is_convex,
    is_fubini,
    mahonian_closed_form,
    mahonian_distribution,
    pi_of,
    sigma_of,
    standardize,
    star_growth,
    word_act,
)


def small_words(max_n=6, max_k=3):
    return st.integers(1, max_k).flatmap(
        lambda k: st.lists(st.integers(1, k), min_size=1, max_size=max_n).map(
            lambda ls: Word(tuple(ls), k)
        )
    )


class TestPerm:
    def test_identity_and_compose(self):
        p = Perm([2, 3, 1])
        assert p * p.inverse() == Perm.identity(3)
        assert (p * p).images == (3, 1, 2)

    def test_inversions(self):
        assert Perm([3, 1, 4, 2]).inversions() == 3
        assert Perm.identity(5).inversions() == 0

    def test_not_a_permutation(self):
        with pytest.raises(ValueError):
            Perm([1, 1, 2])

    def test_one_times(self):
        assert Perm([2, 1]).one_times(2) == Perm([1, 2, 4, 3])


class TestMembership:
    def test_paper_word(self):
        assert is_fubini(Word.parse("31231", 3))
        assert in_wnk(Word.parse("31231", 3))

    def test_missing_letter(self):
        assert not is_fubini(Word.parse("113", 3))

    def test_single_letter(self):
        assert is_fubini(Word.parse("1", 1))

    def test_fubini_but_not_full_alphabet(self):
        w = Word.parse("112", 3)
        assert is_fubini(w)
        assert not in_wnk(w)


class TestEnumeration:
    def test_w32_explicit(self):
        assert [str(w) for w in enumerate_fubini(3, 2)] == [
            "112",
            "121",
            "122",
            "211",
            "212",
            "221",
        ]

    def test_permutation_case(self):
        for n in range(1, 6):
            words = enumerate_fubini(n, n)
            assert len(words) == factorial(n)
            assert all(sorted(w.letters) == list(range(1, n + 1)) for w in words)

    def test_count_53(self):
        assert len(enumerate_fubini(5, 3)) == 6 * q_stirling(5, 3)(1) == 150

    def test_matches_brute_force_filter(self):
        brute = sorted(
            letters
            for letters in product(range(1, 3), repeat=4)
            if set(letters) == {1, 2}
        )
        assert [w.letters for w in enumerate_fubini(4, 2)] == brute

    def test_words_s_reduces_to_fubini(self):
        assert enumerate_words_s(4, 3, 3) == enumerate_fubini(4, 3)

    def test_words_s_brute_force(self):
        brute = sorted(
            letters
            for letters in product(range(1, 4), repeat=3)
            if {1, 2} <= set(letters)
        )
        assert [w.letters for w in enumerate_words_s(3, 3, 2)] == brute

    def test_tail_221_golden(self):
        assert sorted(str(w) for w in enumerate_tail(2, 2, 1)) == [
            "12",
            "13",
            "14",
            "21",
            "31",
            "41",
        ]

    def test_tail_count(self):
        assert len(enumerate_tail(3, 2, 1)) == comb(4, 2) * 6 == 36
        brute = [
            letters
            for letters in product(range(1, 6), repeat=3)
            if len(set(letters)) == 3 and 1 in letters
        ]
        assert len(brute) == 36

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            enumerate_fubini(2, 3)
        with pytest.raises(ValueError):
            enumerate_words_s(3, 2, 3)
        with pytest.raises(ValueError):
            enumerate_tail(2, 2, 3)


class TestInitialStructure:
    def test_initial_positions_paper(self):
        assert initial_positions(Word.parse("3343414", 4)) == (1, 3, 6)
        assert initial_positions(Word.parse("2331231", 3)) == (1, 2, 4)
        assert initial_positions(Word.parse("1111", 1)) == (1,)

    def test_pi_paper(self):
        assert pi_of(Word.parse("331443123", 4)) == (3, 1, 4, 2)
        assert pi_of(Word.parse("2331231", 3)) == (2, 3, 1)
        assert pi_of(Word.parse("1234", 4)) == (1, 2, 3, 4)


class TestConvexification:
    def test_paper_examples(self):
        assert str(convexify(Word.parse("244234", 4))) == "224443"
        assert str(convexify(Word.parse("224443", 4))) == "224443"
        assert str(convexify(Word.parse("215235", 5))) == "221553"

    def test_is_convex(self):
        assert is_convex(Word.parse("224443", 4))
        assert not is_convex(Word.parse("244234", 4))

    @given(small_words())
    def test_idempotent_and_convex(self, w):
        cw = convexify(w)
        assert is_convex(cw)
        assert convexify(cw) == cw
        assert sorted(cw.letters) == sorted(w.letters)
        assert pi_of(cw) == pi_of(w)


class TestSigma:
    def test_paper_example(self):
        assert sigma_of(Word.parse("215235", 5)) == Perm([1, 4, 2, 3, 6, 5])

    def test_convex_gives_identity(self):
        for w in enumerate_fubini(4, 2):
            assert sigma_of(convexify(w)) == Perm.identity(4)

    def test_sigma_carries_word_to_convexification(self):
        # sigma(w).w = conv(w) and sigma(w)^{-1}.conv(w) = w under the
        # letter-place action; exhaustive over [3]^5
        for letters in product(range(1, 4), repeat=5):
            w = Word(letters, 3)
            sigma = sigma_of(w)
            assert word_act(sigma, w) == convexify(w)
            assert word_act(sigma.inverse(), convexify(w)) == w


class TestSigmaFactorization:
    def test_exhaustive_properties(self):
        # reduced length, correct endpoint, and no swap of two positions
        # that are both initial at the time of the swap
        from fubini.words import sigma_factorization

        for n in range(1, 7):
            for k in (1, 2, 3):
                if k > n:
                    continue
                for letters in product(range(1, k + 1), repeat=n):
                    w = Word(letters, k)
                    swaps = sigma_factorization(w)
                    assert len(swaps) == sigma_of(w).inversions()
                    cur = list(convexify(w).letters)
                    for i in swaps:
                        firsts = set()
                        initials = set()
                        for pos, a in enumerate(cur, start=1):
                            if a not in firsts:
                                firsts.add(a)
                                initials.add(pos)
                        assert not (i in initials and i + 1 in initials)
                        cur[i - 1], cur[i] = cur[i], cur[i - 1]
                    assert tuple(cur) == letters


class TestStandardize:
    def test_paper_example(self):
        assert standardize(Word.parse("215235", 5)) == Perm([2, 1, 5, 6, 3, 7, 4])

    def test_derived_example(self):
        assert standardize(Word.parse("2331231", 3)) == Perm([2, 3, 4, 1, 5, 6, 7])

    def test_permutation_fixed(self):
        for letters in [(1, 2, 3), (3, 1, 2), (2, 3, 1)]:
            w = Word(letters, 3)
            assert standardize(w) == Perm(letters)

    def test_tail_is_increasing(self):
        for k in range(1, 4):
            for letters in product(range(1, k + 1), repeat=4):
                w = Word(letters, k)
                std = standardize(w)
                m = len(set(letters))
                assert std.size == 4 + k - m
                tail = std.images[4:]
                assert list(tail) == sorted(tail)


class TestDimension:
    def test_paper_value(self):
        assert dimension_stat(Word.parse("2331231", 3)) == 5

    def test_rejects_non_fubini(self):
        with pytest.raises(ValueError):
            dimension_stat(Word.parse("113", 3))

    def test_distribution_32(self):
        dist = QPoly()
        for w in enumerate_fubini(3, 2):
            dist = dist + QPoly.q_power(dimension_stat(w))
        assert dist == QPoly([2, 3, 1])

    def test_closed_formulas_agree_with_star_count(self):
        # both closed formulas against the pattern-matrix definition
        from fubini.cells import pattern_matrix

        for n in range(1, 8):
            for k in range(1, min(n, 4) + 1):
                for w in enumerate_fubini(n, k):
                    pi = pi_of(w)
                    inv = sum(
                        1
                        for a in range(len(pi))
                        for b in range(a + 1, len(pi))
                        if pi[a] > pi[b]
                    )
                    pos = {a: i for i, a in enumerate(pi, start=1)}
                    init = set(initial_positions(w))
                    first_form = (
                        k * (k - 1) // 2
                        - inv
                        + sum(
                            pos[w[i]] - 1
                            for i in range(1, n + 1)
                            if i not in init
                        )
                    )
                    second_form = -inv - n + sum(pos[a] for a in w.letters)
                    stars = pattern_matrix(w).star_count()
                    assert first_form == second_form == stars == dimension_stat(w)


class TestGrowth:
    def test_star_growth_paper(self):
        w = Word.parse("21124231", 4)
        assert str(star_growth(w, 3)) == "211242313"
        assert str(star_growth(w, 1)) == "211242311"

    def test_bar_growth_paper(self):
        w = Word.parse("21124231", 4)
        assert str(bar_growth(w, 1)) == "322353421"
        assert str(bar_growth(w, 2)) == "311353412"
        assert str(bar_growth(w, 5)) == "211242315"

    def test_range_validation(self):
        w = Word.parse("112", 2)
        with pytest.raises(ValueError):
            star_growth(w, 3)
        with pytest.raises(ValueError):
            bar_growth(w, 4)

    def test_dimension_increments(self):
        for n in range(2, 6):
            for k in range(1, n + 1):
                for w in enumerate_fubini(n, k):
                    pi = pi_of(w)
                    pos = {a: i for i, a in enumerate(pi, start=1)}
                    base = dimension_stat(w)
                    for j in range(1, k + 1):
                        assert dimension_stat(star_growth(w, j)) == base + pos[j] - 1
                    for j in range(1, k + 2):
                        assert dimension_stat(bar_growth(w, j)) == base + j - 1

    def test_growth_uniqueness(self):
        # every Fubini word of length n+1 arises from exactly one growth
        for n in range(1, 6):
            grown: list[tuple] = []
            for k in range(1, n + 1):
                for w in enumerate_fubini(n, k):
                    for j in range(1, k + 1):
                        v = star_growth(w, j)
                        grown.append((v.k, v.letters))
                    for j in range(1, k + 2):
                        v = bar_growth(w, j)
                        grown.append((v.k, v.letters))
            targets = [
                (k, w.letters)
                for k in range(1, n + 2)
                for w in enumerate_fubini(n + 1, k)
            ]
            assert sorted(grown) == sorted(targets)


class TestMahonian:
    def test_32(self):
        assert mahonian_distribution(3, 2) == QPoly([2, 3, 1])

    def test_permutation_case(self):
        for n in range(1, 6):
            assert mahonian_distribution(n, n) == q_factorial(n)

    def test_count_53(self):
        assert mahonian_distribution(5, 3)(1) == 150

    def test_matches_closed_form(self):
        for n in range(1, 7):
            for k in range(1, n + 1):
                assert mahonian_distribution(n, k) == mahonian_closed_form(n, k)

    def test_matches_per_word_statistic(self):
        for n in range(1, 7):
            for k in range(1, n + 1):
                dist = QPoly()
                for w in enumerate_fubini(n, k):
                    dist = dist + QPoly.q_power(dimension_stat(w))
                assert dist == mahonian_distribution(n, k)


class TestWordType:
    def test_alphabet_validation(self):
        with pytest.raises(ValueError):
            Word((1, 4), 3)

    def test_parse_both_formats(self):
        assert Word.parse("[1,12,3]", 12).letters == (1, 12, 3)
        assert Word.parse("113", 3).letters == (1, 1, 3)

    def test_str_wide_alphabet(self):
        assert str(Word((1, 12), 12)) == "[1,12]"
