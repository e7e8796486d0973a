"""Hilbert-scheme fixed points, torus actions, embeddings, nilpotents."""

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cohomix.algebra import jordan_type
from cohomix.errors import (
    ConditionViolated,
    InvalidDegree,
)
from cohomix.gotzmann import (
    PartitionTriple,
    build_torus_action,
    degree_k_part,
    enumerate_hilb_fixed_points,
    hilb_minus_cell_dimension,
    jordan_regularity_check,
    monomial_basis,
    nilpotent_matrix_on_Rk,
    tangent_weights,
)


def partitions_count(m):
    # Euler's pentagonal-free DP, small m only
    table = [1] + [0] * m
    for part in range(1, m + 1):
        for total in range(part, m + 1):
            table[total] += table[total - part]
    return table[m]


class TestMonomialBasis:
    def test_k1_order(self):
        assert monomial_basis(1).monomials == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_k2_order(self):
        assert monomial_basis(2).monomials == (
            (0, 0, 2), (0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0),
        )

    def test_k2_labels(self):
        basis = monomial_basis(2)
        assert [basis.label(m) for m in basis] == [
            "X_2^2", "X_1*X_2", "X_1^2", "X_0*X_2", "X_0*X_1", "X_0^2",
        ]

    def test_length(self):
        for k in range(1, 6):
            assert len(monomial_basis(k)) == (k + 2) * (k + 1) // 2

    def test_rejects_k0(self):
        with pytest.raises(InvalidDegree):
            monomial_basis(0)


class TestTorusAction:
    def test_worked_weights(self):
        action = build_torus_action(2, 3, 3, 2, 1)
        assert action.weight_system().weights == (6, 12, 18, 30, 36, 54)

    def test_condition_two_failure(self):
        with pytest.raises(ConditionViolated) as exc:
            build_torus_action(2, 2, 3, 2, 1)
        assert "condition (2)" in str(exc.value)

    def test_condition_one_failure(self):
        # (2) holds (16 > 3*4) but (1) fails (16 > 16 + 8 is false)
        with pytest.raises(ConditionViolated) as exc:
            build_torus_action(3, 4, 2, 2, 1)
        assert "condition (1)" in str(exc.value)

    def test_condition_two_checked_before_one(self):
        # k=2, g=2 violates both; the reported failure must be (2)
        with pytest.raises(ConditionViolated) as exc:
            build_torus_action(2, 2, 3, 2, 1)
        assert "condition (2)" in str(exc.value)

    def test_defaults_valid_through_k6(self):
        for k in range(1, 7):
            action = build_torus_action(k)
            assert action.g == k + 1
            weights = action.weight_system().weights
            assert len(set(weights)) == len(weights)

    def test_rejects_small_g(self):
        with pytest.raises(ConditionViolated):
            build_torus_action(2, 1, 3, 2, 1)


class TestPartitionTriple:
    def test_parse_round_trip(self):
        for text in ("1;1;", ";;3", "2,1;;", "1;1;1"):
            assert str(PartitionTriple.parse(text)) == text

    def test_parse_rejects_wrong_arity(self):
        with pytest.raises(ValueError):
            PartitionTriple.parse("1;1")

    def test_size(self):
        assert PartitionTriple.parse("2,1;;1").size == 4


class TestEnumeration:
    def test_counts(self):
        assert len(enumerate_hilb_fixed_points(1)) == 3
        assert len(enumerate_hilb_fixed_points(2)) == 9
        assert len(enumerate_hilb_fixed_points(3)) == 22

    def test_counts_against_triple_partition_oracle(self):
        # number of triples of partitions with total size k
        for k in range(1, 6):
            expected = sum(
                partitions_count(s0) * partitions_count(s1) * partitions_count(k - s0 - s1)
                for s0 in range(k + 1)
                for s1 in range(k - s0 + 1)
            )
            assert len(enumerate_hilb_fixed_points(k)) == expected

    def test_deterministic_order_k2(self):
        got = [str(t) for t in enumerate_hilb_fixed_points(2)]
        assert got == [
            ";;2", ";;1,1", ";1;1", ";2;", ";1,1;",
            "1;;1", "1;1;", "2;;", "1,1;;",
        ]

    def test_all_distinct(self):
        pts = enumerate_hilb_fixed_points(4)
        assert len(set(pts)) == len(pts)


class TestDegreeKPart:
    def test_worked_example_k2(self):
        image = degree_k_part(PartitionTriple.parse("1;1;"), 2)
        assert image.indices == (1, 2, 4, 5)
        assert image.n == 6

    def test_worked_example_k1(self):
        image = degree_k_part(PartitionTriple.parse("1;;"), 1)
        assert image.indices == (1, 2)

    def test_size_always_nk_minus_k(self):
        for k in range(1, 5):
            n = len(monomial_basis(k))
            for t in enumerate_hilb_fixed_points(k):
                assert degree_k_part(t, k).dim == n - k

    def test_injective(self):
        for k in range(1, 5):
            images = [degree_k_part(t, k).indices for t in enumerate_hilb_fixed_points(k)]
            assert len(set(images)) == len(images)

    def test_size_mismatch_raises(self):
        with pytest.raises(InvalidDegree):
            degree_k_part(PartitionTriple.parse("1;1;"), 3)

    def test_weights_consistent_with_ambient(self):
        # the action's weights at the image indices are the monomial weights
        # of the monomials in the ideal
        k = 2
        action = build_torus_action(k)
        ws = action.weight_system()
        basis = monomial_basis(k)
        for t in enumerate_hilb_fixed_points(k):
            image = degree_k_part(t, k)
            got = ws.at(image.indices)
            expected = tuple(
                action.monomial_weight(basis[i - 1]) for i in image.indices
            )
            assert got == expected


class TestTangentWeights:
    def test_count_and_nonzero(self):
        for k in (1, 2, 3):
            action = build_torus_action(k)
            for t in enumerate_hilb_fixed_points(k):
                weights = tangent_weights(t, action)
                assert len(weights) == 2 * k
                assert all(w != 0 for w in weights)

    def test_k2_cell_dimensions_frozen(self):
        action = build_torus_action(2)
        dims = [
            hilb_minus_cell_dimension(t, action)
            for t in enumerate_hilb_fixed_points(2)
        ]
        assert dims == [4, 3, 3, 2, 2, 2, 1, 1, 0]

    def test_unique_source_and_sink(self):
        # exactly one fully attracting and one fully repelling point
        for k in (1, 2, 3):
            action = build_torus_action(k)
            dims = [
                hilb_minus_cell_dimension(t, action)
                for t in enumerate_hilb_fixed_points(k)
            ]
            assert dims.count(0) == 1
            assert dims.count(2 * k) == 1

    @settings(deadline=None, max_examples=20)
    @given(st.sampled_from([(3, 2, 1), (4, 2, 1), (5, 3, 1), (4, 3, 2)]))
    def test_histogram_independent_of_exponents(self, lams):
        k = 2
        try:
            action = build_torus_action(k, k + 1, *lams)
        except ConditionViolated:
            return
        dims = sorted(
            hilb_minus_cell_dimension(t, action)
            for t in enumerate_hilb_fixed_points(k)
        )
        assert dims == [0, 1, 1, 2, 2, 2, 3, 3, 4]


class TestNilpotent:
    REMARK_BASIS = [(0, 0, 2), (0, 1, 1), (1, 0, 1), (0, 2, 0), (1, 1, 0), (2, 0, 0)]

    def test_paper_matrix_bit_exact(self):
        m = nilpotent_matrix_on_Rk(2, self.REMARK_BASIS)
        assert [[int(x) for x in row] for row in m.entries] == [
            [0, 1, 0, 0, 0, 0],
            [0, 0, 1, 2, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 2],
            [0, 0, 0, 0, 0, 0],
        ]

    def test_matches_sympy_derivation(self):
        # independent construction: apply X_1*d/dX_0 + X_2*d/dX_1 to each
        # basis monomial with sympy and read off coordinates
        k = 3
        x0, x1, x2 = sympy.symbols("x0 x1 x2")
        basis = monomial_basis(k)
        mono = [x0 ** a * x1 ** b * x2 ** c for a, b, c in basis]
        m = nilpotent_matrix_on_Rk(k)
        for j, expr in enumerate(mono):
            image = sympy.expand(x1 * sympy.diff(expr, x0) + x2 * sympy.diff(expr, x1))
            for i, target in enumerate(mono):
                coeff = sympy.Poly(image, x0, x1, x2).coeff_monomial(target)
                assert m.entry(i, j) == coeff

    def test_basis_order_does_not_change_jordan_type(self):
        default = jordan_type(nilpotent_matrix_on_Rk(2))
        remark = jordan_type(nilpotent_matrix_on_Rk(2, self.REMARK_BASIS))
        assert default == remark == (5, 1)

    def test_rejects_non_permutation_basis(self):
        with pytest.raises(InvalidDegree):
            nilpotent_matrix_on_Rk(2, [(0, 0, 2)] * 6)

    def test_jordan_regularity_table(self):
        assert jordan_regularity_check(1) == ((3,), True)
        assert jordan_regularity_check(2) == ((5, 1), False)
        assert jordan_regularity_check(3) == ((7, 3), False)
        assert jordan_regularity_check(4) == ((9, 5, 1), False)

    def test_block_sizes_sum_to_dim(self):
        for k in range(1, 5):
            jt, _ = jordan_regularity_check(k)
            assert jt.size == (k + 2) * (k + 1) // 2
