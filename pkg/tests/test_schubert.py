from fractions import Fraction
from itertools import permutations

import pytest

from fubini.polyring import MultiPoly, act, reverse_vars
from fubini.schubert import (
    circledast,
    circledast_check,
    double_schubert,
    dual_stable_check,
    dual_stable_tower,
    grassmannian_shape,
    one_times_word,
    schubert_perm,
    schubert_word,
    stanley_report,
    stanley_truncation,
)
from fubini.symfunc import schur_poly
from fubini.words import Perm, Word, convexify, enumerate_fubini, sigma_of, standardize


def x(i, n):
    return MultiPoly.variable(i, n)


class TestSchubertPerm:
    def test_identity(self):
        assert schubert_perm(Perm.identity(4)) == MultiPoly.one(4)

    def test_longest_element(self):
        assert schubert_perm(Perm([3, 2, 1])) == MultiPoly.monomial((2, 1, 0))

    def test_grassmannian_s3(self):
        assert schubert_perm(Perm([1, 3, 2])) == x(1, 3) + x(2, 3)

    def test_simple_transposition(self):
        assert schubert_perm(Perm([2, 1, 3])) == x(1, 3)

    def test_degree_and_positivity(self):
        for n in range(1, 7):
            for imgs in permutations(range(1, n + 1)):
                p = Perm(imgs)
                poly = schubert_perm(p)
                assert poly.is_homogeneous()
                assert poly.degree() == p.inversions()
                assert all(c > 0 for c in poly.terms.values())

    def test_linear_independence(self):
        # rank of the coefficient matrix of all Schubert polynomials of S_n
        for n in range(1, 6):
            perms = [Perm(imgs) for imgs in permutations(range(1, n + 1))]
            polys = [schubert_perm(p) for p in perms]
            monomials = sorted({e for f in polys for e in f.terms})
            col = {e: i for i, e in enumerate(monomials)}
            rows = []
            for f in polys:
                row = [Fraction(0)] * len(monomials)
                for e, c in f.terms.items():
                    row[col[e]] = Fraction(c)
                rows.append(row)
            rank = 0
            for j in range(len(monomials)):
                pivot = next((r for r in range(rank, len(rows)) if rows[r][j]), None)
                if pivot is None:
                    continue
                rows[rank], rows[pivot] = rows[pivot], rows[rank]
                lead = rows[rank][j]
                for r in range(len(rows)):
                    if r != rank and rows[r][j]:
                        factor = rows[r][j] / lead
                        rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
                rank += 1
            assert rank == len(perms)

    def test_grassmannian_schur_bridge(self):
        # every Grassmannian permutation's Schubert polynomial is the
        # Jacobi-Trudi Schur polynomial in its descent-many variables
        for m in range(2, 8):
            for imgs in permutations(range(1, m + 1)):
                p = Perm(imgs)
                shape = grassmannian_shape(p)
                if shape is None:
                    continue
                descent = p.descents()[0]
                expected = schur_poly(shape, descent).embed(m)
                assert schubert_perm(p) == expected


class TestDoubleSchubert:
    def test_identity(self):
        assert double_schubert(Perm.identity(3)) == MultiPoly.one(6)

    def test_simple_transposition(self):
        d = double_schubert(Perm([2, 1]))
        assert d == MultiPoly(4, {(1, 0, 0, 0): 1, (0, 0, 1, 0): -1})

    def test_specializes_at_y_zero(self):
        for imgs in permutations(range(1, 4)):
            p = Perm(imgs)
            d = double_schubert(p)
            at_zero = d
            for i in range(4, 7):
                at_zero = at_zero.set_var_zero(i)
            single = schubert_perm(p).embed(6)
            assert at_zero == single

    def test_longest_element_factors(self):
        # the top double polynomial is the product of x_i - y_j over i+j <= n
        n = 3
        top = double_schubert(Perm([3, 2, 1]))
        expected = MultiPoly.one(2 * n)
        for i in range(1, n):
            for j in range(1, n - i + 1):
                expected = expected * (x(i, 2 * n) - x(n + j, 2 * n))
        assert top == expected


class TestSchubertWord:
    def test_single_letter_examples(self):
        assert schubert_word(Word.parse("211", 2)) == x(1, 3)

    def test_2113(self):
        expected = x(1, 4) ** 2 + x(1, 4) * x(2, 4) + x(1, 4) * x(3, 4)
        assert schubert_word(Word.parse("2113", 3)) == expected

    def test_linear_family_84(self):
        # the eight words whose classes are the elementary linear forms
        words = [
            "21344444",
            "13244444",
            "12433333",
            "12334444",
            "12343444",
            "12344344",
            "12344434",
            "12344443",
        ]
        k, n = 4, 8
        for i, text in enumerate(words, start=1):
            w = Word.parse(text, k)
            if i <= k:
                expected = sum((x(j, n) for j in range(1, i + 1)), MultiPoly.zero(n))
            else:
                expected = sum(
                    (x(j, n) for j in range(1, k)), MultiPoly.zero(n)
                ) + x(i, n)
            assert schubert_word(w) == expected

    def test_reduces_to_classical_on_permutations(self):
        for imgs in permutations(range(1, 5)):
            w = Word(imgs, 4)
            assert schubert_word(w) == schubert_perm(Perm(imgs))

    def test_matches_definition(self):
        for w in enumerate_fubini(4, 2):
            direct = act(
                sigma_of(w), schubert_perm(standardize(convexify(w))).restrict(4)
            )
            assert schubert_word(w) == direct


class TestCircledAst:
    def test_paper_example(self):
        assert str(circledast(Word.parse("3313424", 4))) == "33134242"

    def test_all_w43(self):
        for w in enumerate_fubini(4, 3):
            assert circledast_check(w)

    def test_permutations(self):
        for imgs in permutations(range(1, 4)):
            w = Word(imgs, 3)
            assert str(circledast(w)) == "".join(map(str, imgs)) + str(imgs[-1])
            assert circledast_check(w)


class TestStanley:
    def test_identity(self):
        for m in range(3):
            assert stanley_truncation(Perm.identity(2), m) == MultiPoly.one(2 + m)

    def test_s1_truncations(self):
        assert stanley_truncation(Perm([2, 1]), 1) == x(1, 3) + x(2, 3)
        assert stanley_truncation(Perm([2, 1]), 2) == x(1, 4) + x(2, 4) + x(3, 4)

    def test_report_flags(self):
        report = stanley_report(Perm([2, 1]), 1)
        # x1, x2 are stable; the next variable's coefficient is still moving
        assert report["stable"] == x(1, 3) + x(2, 3)
        assert report["flagged"] == [(0, 0, 1)]

    def test_word_limit_reduces_to_standardized_convexification(self):
        # in the stable range (monomials in the prepended variables) the
        # word truncation agrees with the permutation truncation of
        # std(conv(w)), since the sorting permutation acts on the tail
        m = 3
        for w in enumerate_fubini(3, 2):
            v = standardize(convexify(w))
            word_side = schubert_word(one_times_m(w, m))
            perm_side = schubert_perm(v.one_times(m)).restrict(word_side.nvars)
            for e, c in perm_side.terms.items():
                if all(d == 0 for d in e[m:]):
                    assert word_side.coefficient(e) == c


def one_times_m(w: Word, m: int) -> Word:
    for _ in range(m):
        w = one_times_word(w)
    return w


class TestDualStability:
    def test_tower_for_2123(self):
        w = Word.parse("2123", 3)
        tower = dual_stable_tower(w, 2)
        assert tower[0] == MultiPoly(4, {(0, 2, 0, 1): 1, (0, 1, 0, 2): 1})
        assert dual_stable_check(w, 2)

    def test_exhaustive_small(self):
        for k in (1, 2, 3):
            for w in enumerate_fubini(3, k):
                assert dual_stable_check(w, 2)

    def test_constant_word(self):
        w = Word.parse("1111", 1)
        assert schubert_word(w) == MultiPoly.one(4)
        assert dual_stable_check(w, 3)

    def test_one_times_compatibility(self):
        # conv, std, sigma all commute with prepending a fixed letter
        for n in range(1, 5):
            for k in range(1, n + 1):
                for w in enumerate_fubini(n, k):
                    grown = one_times_word(w)
                    assert convexify(grown) == one_times_word(convexify(w))
                    assert standardize(convexify(grown)) == standardize(
                        convexify(w)
                    ).one_times(1)
                    assert sigma_of(grown) == sigma_of(w).one_times(1)


class TestGrassmannianShape:
    def test_examples(self):
        assert grassmannian_shape(Perm([1, 3, 2])) == (1,)
        assert grassmannian_shape(Perm([2, 4, 1, 3])) == (2, 1)
        assert grassmannian_shape(Perm([3, 2, 1])) is None
