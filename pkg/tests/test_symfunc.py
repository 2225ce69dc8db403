from itertools import permutations
from math import factorial

import pytest

from fubini.polyring import MultiPoly, act, complete_sym, elem_sym
from fubini.qseries import QPoly, q_binomial, q_factorial
from fubini.quotient import RingSpec, hilbert_series
from fubini.symfunc import (
    SchurExpansion,
    cycle_type,
    des,
    grfrob_R,
    grfrob_T,
    hilbert_from_frobenius,
    irr_character,
    maj,
    num_syt,
    partitions_of,
    schur_poly,
    shape_of,
    syt,
)
from fubini.words import Perm


class TestTableaux:
    def test_row_shape(self):
        for n in range(1, 7):
            tabs = syt((n,))
            assert len(tabs) == 1
            assert maj(tabs[0]) == 0 and des(tabs[0]) == 0

    def test_column_shape(self):
        for n in range(2, 7):
            tabs = syt((1,) * n)
            assert len(tabs) == 1
            assert maj(tabs[0]) == n * (n - 1) // 2
            assert des(tabs[0]) == n - 1

    def test_hook_21(self):
        tabs = syt((2, 1))
        assert sorted(maj(t) for t in tabs) == [1, 2]
        assert all(des(t) == 1 for t in tabs)

    def test_counts_match_hook_formula(self):
        for n in range(1, 7):
            for shape in partitions_of(n):
                assert len(syt(shape)) == num_syt(shape)

    def test_rsk_dimension_identity(self):
        for n in range(1, 9):
            assert sum(num_syt(s) ** 2 for s in partitions_of(n)) == factorial(n)

    def test_shapes_valid(self):
        for t in syt((3, 2)):
            assert shape_of(t) == (3, 2)

    def test_bad_shape_rejected(self):
        with pytest.raises(ValueError):
            syt((1, 2))


class TestSchurPolynomials:
    def test_single_row(self):
        assert schur_poly((1,), 3) == elem_sym(1, 3)
        assert schur_poly((2,), 3) == complete_sym(2, 3)

    def test_single_column_is_elementary(self):
        for n in range(1, 6):
            for i in range(1, n + 1):
                assert schur_poly((1,) * (n - i + 1), n) == elem_sym(n - i + 1, n)

    def test_too_many_rows_vanishes(self):
        assert schur_poly((1, 1, 1), 2) == MultiPoly.zero(2)

    def test_21_two_vars(self):
        x1, x2 = MultiPoly.variable(1, 2), MultiPoly.variable(2, 2)
        assert schur_poly((2, 1), 2) == x1 * x1 * x2 + x1 * x2 * x2

    def test_symmetry(self):
        for n in range(2, 5):
            for size in range(1, 6):
                for shape in partitions_of(size):
                    s = schur_poly(shape, n)
                    for i in range(1, n):
                        swap = Perm.identity(n).swap_adjacent(i)
                        assert act(swap, s) == s

    def test_dual_pieri(self):
        # s_{(k+i+1, 1^{n-i-1})} = h_{k+i} e_{n-i} - s_{(k+i, 1^{n-i})};
        # the product must have the full degree k+n for the hooks to chain
        for (n, k) in [(3, 2), (4, 2), (3, 3)]:
            for i in range(1, n):
                lhs = schur_poly((k + i + 1,) + (1,) * (n - i - 1), n)
                rhs = complete_sym(k + i, n) * elem_sym(n - i, n) - schur_poly(
                    (k + i,) + (1,) * (n - i), n
                )
                assert lhs == rhs


class TestGradedFrobenius:
    def test_base_case(self):
        assert grfrob_R(1, 1) == SchurExpansion({(1,): QPoly.one()})

    def test_32_frozen(self):
        expected = SchurExpansion(
            {(3,): QPoly([1, 1]), (2, 1): QPoly([0, 1, 1])}
        )
        assert grfrob_R(3, 2) == expected

    def test_coinvariant_case_is_maj_generating_function(self):
        for n in range(1, 6):
            frob = grfrob_R(n, n)
            for shape in partitions_of(n):
                expected = QPoly()
                for t in syt(shape):
                    expected = expected + QPoly.q_power(maj(t))
                assert frob[shape] == expected

    def test_hilbert_specialization(self):
        for n in range(1, 7):
            for k in range(1, n + 1):
                assert hilbert_from_frobenius(grfrob_R(n, k)) == hilbert_series(
                    RingSpec.R(n, k)
                )

    def test_ungraded_dimension(self):
        from fubini.qseries import q_stirling

        for n in range(1, 7):
            for k in range(1, n + 1):
                total = hilbert_from_frobenius(grfrob_R(n, k))(1)
                assert total == factorial(k) * q_stirling(n, k)(1)

    def test_single_term(self):
        assert hilbert_from_frobenius(
            SchurExpansion({(4,): QPoly.one()})
        ) == QPoly.one()


class TestTailFrobenius:
    def test_base_case(self):
        assert grfrob_T(1, 1, 1) == SchurExpansion({(1,): QPoly.one()})

    def test_221_golden(self):
        factor = q_binomial(3, 2)
        expected = SchurExpansion(
            {(2,): factor, (1, 1): QPoly.q_power(1) * factor}
        )
        assert grfrob_T(2, 2, 1) == expected

    def test_hilbert_matches_quotient(self):
        for (n, k, r) in [(2, 2, 1), (3, 2, 1), (3, 3, 2), (2, 3, 1)]:
            assert hilbert_from_frobenius(grfrob_T(n, k, r)) == hilbert_series(
                RingSpec.T(n, k, r)
            )

    def test_scalar_shift_of_coinvariants(self):
        expansion = grfrob_T(3, 2, 2)
        base = grfrob_R(3, 3)
        factor = q_binomial(3, 2)
        for shape in base:
            assert expansion[shape] == factor * base[shape]


class TestCharacters:
    def test_dimension_column(self):
        for n in range(1, 7):
            for shape in partitions_of(n):
                assert irr_character(shape, (1,) * n) == num_syt(shape)

    def test_trivial_representation(self):
        for n in range(1, 6):
            for mu in partitions_of(n):
                assert irr_character((n,), mu) == 1

    def test_sign_of_s2(self):
        assert irr_character((1, 1), (2,)) == -1

    def test_sign_representation(self):
        for n in range(2, 6):
            for mu in partitions_of(n):
                sign = (-1) ** (n - len(mu))
                assert irr_character((1,) * n, mu) == sign

    def test_row_orthogonality(self):
        # sum over classes |C_mu| chi(mu) chi'(mu) = n! delta
        for n in range(1, 7):
            shapes = partitions_of(n)
            sizes = {mu: _class_size(mu) for mu in shapes}
            for a in shapes:
                for b in shapes:
                    total = sum(
                        sizes[mu] * irr_character(a, mu) * irr_character(b, mu)
                        for mu in shapes
                    )
                    assert total == (factorial(n) if a == b else 0)

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            irr_character((2,), (1, 1, 1))


def _class_size(mu) -> int:
    n = sum(mu)
    mults: dict[int, int] = {}
    for part in mu:
        mults[part] = mults.get(part, 0) + 1
    denom = 1
    for part, m in mults.items():
        denom *= part**m * factorial(m)
    return factorial(n) // denom


class TestCycleType:
    def test_examples(self):
        assert cycle_type(Perm([2, 1, 3])) == (2, 1)
        assert cycle_type(Perm([2, 3, 1])) == (3,)
        assert cycle_type(Perm.identity(4)) == (1, 1, 1, 1)

    def test_partition_of_class_sizes(self):
        for n in range(1, 6):
            counts: dict[tuple, int] = {}
            for imgs in permutations(range(1, n + 1)):
                ct = cycle_type(Perm(imgs))
                counts[ct] = counts.get(ct, 0) + 1
            assert counts == {mu: _class_size(mu) for mu in partitions_of(n)}


class TestSchurExpansionType:
    def test_mixed_sizes_rejected(self):
        with pytest.raises(ValueError):
            SchurExpansion({(2,): QPoly.one(), (1,): QPoly.one()})

    def test_json(self):
        e = grfrob_R(3, 2)
        assert e.to_json() == [[[2, 1], [0, 1, 1]], [[3], [1, 1]]]
