"""Closed-form counters against frozen values and the edge-subset oracle.

Frozen [DERIVED] values in this module were computed with the
brute-force helpers in oracles.py (complete-graph edge subsets plus a
union-find tree check) before being inlined.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest

import oracles
from treecount.core import (
    Composition,
    CompositionSumMismatch,
    DegreeSequence,
    InvalidDegreeSequence,
    OutOfRange,
    as_integer,
    composition,
    degree_sequence,
)
from treecount.counting import (
    assemble_double_count,
    binomial_collapse,
    count_fixed_composition_trees,
    count_supervertex_trees,
    count_total_trees,
    count_trees_deg_v1,
    count_trees_deg_v1_rational,
    count_trees_with_degrees,
    deg_v1_counts,
    expand_L3,
    lemma1_lhs,
    recursion_T,
)
from treecount.enumeration import enumerate_compositions


class TestCountTotalTrees:
    def test_base_case(self):
        assert count_total_trees(2) == 1

    def test_small(self):
        # oracle: 16 spanning trees of the complete graph on 4 vertices
        assert count_total_trees(4) == 16

    def test_convention_n1(self):
        assert count_total_trees(1) == 1

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            count_total_trees(0)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_against_oracle(self, n):
        assert count_total_trees(n) == len(oracles.spanning_trees(n))


class TestCountTreesWithDegrees:
    def test_examples(self):
        assert count_trees_with_degrees(degree_sequence((1, 1))) == 1
        # oracle: filter the 16 trees on 4 vertices by degree vector
        assert count_trees_with_degrees(degree_sequence((1, 1, 1, 3))) == 1
        assert count_trees_with_degrees(degree_sequence((2, 2, 1, 1))) == 2

    def test_invalid(self):
        with pytest.raises(InvalidDegreeSequence):
            count_trees_with_degrees(DegreeSequence((0, 2, 2, 2)))
        with pytest.raises(InvalidDegreeSequence):
            count_trees_with_degrees(DegreeSequence((1, 2)))

    @pytest.mark.parametrize("n", range(2, 7))
    def test_full_grid_against_oracle(self, n):
        for c in enumerate_compositions(2 * n - 2, n):
            d = DegreeSequence(c.parts)
            assert count_trees_with_degrees(d) == len(oracles.trees_with_degrees(c.parts))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_marginalizes_to_total(self, n):
        total = sum(
            count_trees_with_degrees(DegreeSequence(c.parts))
            for c in enumerate_compositions(2 * n - 2, n)
        )
        assert total == count_total_trees(n)


class TestDegV1:
    def test_examples(self):
        # oracle: filter the 16 trees on 4 vertices by deg(v1)
        assert count_trees_deg_v1(4, 1) == 9
        assert count_trees_deg_v1(4, 3) == 1
        assert count_trees_deg_v1(2, 1) == 1

    def test_rational_examples(self):
        assert count_trees_deg_v1_rational(4, 2) == Fraction(6)
        # k = 1 puts (n-1) in the numerator
        assert count_trees_deg_v1_rational(4, 1) == Fraction(9)
        assert count_trees_deg_v1_rational(2, 1) == Fraction(1)

    def test_out_of_range(self):
        for fn in (count_trees_deg_v1, count_trees_deg_v1_rational, lemma1_lhs):
            with pytest.raises(OutOfRange):
                fn(4, 0)
            with pytest.raises(OutOfRange):
                fn(4, 4)
            with pytest.raises(OutOfRange):
                fn(1, 1)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_against_oracle(self, n):
        for k in range(1, n):
            expected = len(oracles.trees_with_deg_v1(n, k))
            assert count_trees_deg_v1(n, k) == expected
            assert as_integer(count_trees_deg_v1_rational(n, k)) == expected
            assert lemma1_lhs(n, k) == expected

    @pytest.mark.parametrize("n", range(2, 16))
    def test_totality(self, n):
        assert sum(count_trees_deg_v1(n, k) for k in range(1, n)) == count_total_trees(n)

    def test_deg_v1_counts_structure(self):
        rows = deg_v1_counts(4)
        assert [(r.k, r.count) for r in rows] == [(1, 9), (2, 6), (3, 1)]
        assert all(r.n == 4 for r in rows)


class TestLemma1Lhs:
    def test_examples(self):
        # (4,2): compositions (1,2) and (2,1) each contribute 6; 12/2! = 6
        assert lemma1_lhs(4, 2) == 6
        assert lemma1_lhs(4, 1) == 9
        assert lemma1_lhs(2, 1) == 1

    @pytest.mark.parametrize("n", range(2, 10))
    def test_never_non_integral(self, n):
        for k in range(1, n):
            assert lemma1_lhs(n, k) == count_trees_deg_v1(n, k)


class TestFixedCompositionTrees:
    def test_examples(self):
        assert count_fixed_composition_trees(4, composition((1, 2))) == 6
        assert count_fixed_composition_trees(4, composition((3,))) == 9
        assert count_fixed_composition_trees(2, composition((1,))) == 1

    def test_sum_mismatch(self):
        with pytest.raises(CompositionSumMismatch):
            count_fixed_composition_trees(4, composition((1, 1)))
        with pytest.raises(CompositionSumMismatch):
            count_fixed_composition_trees(4, Composition((0, 3), 3))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_rebuilds_deg_v1_counts(self, n):
        for k in range(1, n):
            ordered = sum(
                count_fixed_composition_trees(n, c)
                for c in enumerate_compositions(n - 1, k)
            )
            assert ordered % factorial(k) == 0
            assert ordered // factorial(k) == count_trees_deg_v1(n, k)


class TestRecursion:
    def test_examples(self):
        assert recursion_T(3) == 3
        assert recursion_T(4) == 16
        assert recursion_T(2) == 1
        assert recursion_T(1) == 1

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            recursion_T(0)

    @pytest.mark.parametrize("n", range(2, 31))
    def test_matches_closed_form(self, n):
        assert recursion_T(n) == count_total_trees(n)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_matches_literal_ordered_sum(self, n):
        # direct re-evaluation over ordered compositions, no multiset grouping
        m = n - 1
        total = 0
        for k in range(1, n):
            ordered = 0
            for c in enumerate_compositions(m, k):
                term = factorial(m)
                for a in c.parts:
                    term //= factorial(a)
                for a in c.parts:
                    term *= a * recursion_T(a)
                ordered += term
            assert ordered % factorial(k) == 0
            total += ordered // factorial(k)
        assert recursion_T(n) == total


class TestExpandL3:
    def test_examples(self):
        assert expand_L3(composition((1, 2)), 3) == 2
        assert expand_L3(composition((1, 1, 2)), 4) == 8
        assert expand_L3(composition((3,)), 3) == 1

    def test_sum_mismatch(self):
        with pytest.raises(CompositionSumMismatch):
            expand_L3(composition((1, 2)), 4)
        with pytest.raises(CompositionSumMismatch):
            expand_L3(Composition((0, 3), 3), 3)

    def test_matches_power_form(self):
        for k in range(2, 6):
            for m in range(k, 11):
                for c in enumerate_compositions(m, k):
                    expected = m ** (k - 2)
                    for a in c.parts:
                        expected *= a
                    assert expand_L3(c, m) == expected


class TestSupervertex:
    def test_examples(self):
        assert count_supervertex_trees(degree_sequence((1, 1)), composition((1, 2))) == 2
        assert count_supervertex_trees(degree_sequence((1, 1)), composition((1, 1))) == 1
        assert (
            count_supervertex_trees(degree_sequence((1, 2, 1)), composition((1, 1, 1))) == 1
        )

    def test_validation(self):
        with pytest.raises(InvalidDegreeSequence):
            count_supervertex_trees(DegreeSequence((2, 2)), composition((1, 1)))
        with pytest.raises(CompositionSumMismatch):
            count_supervertex_trees(degree_sequence((1, 1)), composition((1, 1, 1)))
        with pytest.raises(CompositionSumMismatch):
            count_supervertex_trees(degree_sequence((1, 1)), Composition((0, 2), 2))

    def test_marginalizes_to_expansion(self):
        for k in range(2, 6):
            degree_choices = [
                DegreeSequence(c.parts) for c in enumerate_compositions(2 * k - 2, k)
            ]
            for m in range(k, 9):
                for sizes in enumerate_compositions(m, k):
                    total = sum(
                        count_supervertex_trees(d, sizes) for d in degree_choices
                    )
                    assert total == expand_L3(sizes, m)

    def test_two_components_joined_by_one_edge(self):
        # oracle: a 1-vertex and a 2-vertex component join in exactly
        # 1 * 2 ways (either vertex of the larger side)
        assert count_supervertex_trees(degree_sequence((1, 1)), composition((1, 2))) == 2


class TestDoubleCountAssembly:
    def test_small_values(self):
        # oracle: 3 trees on 3 vertices x C(2, k-1) marked-edge choices
        assert assemble_double_count(3, 1) == 3
        assert assemble_double_count(3, 2) == 6
        assert assemble_double_count(2, 1) == 1

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            assemble_double_count(1, 1)
        with pytest.raises(OutOfRange):
            assemble_double_count(3, 4)

    @pytest.mark.parametrize("m", range(2, 8))
    def test_equals_closed_form(self, m):
        for k in range(1, m + 1):
            assert assemble_double_count(m, k) == count_total_trees(m) * comb(m - 1, k - 1)


class TestBinomialCollapse:
    def test_examples(self):
        assert binomial_collapse(4) == 16  # 9 + 6 + 1
        assert binomial_collapse(2) == 1
        assert binomial_collapse(3) == 3  # 2 + 1

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            binomial_collapse(1)

    @pytest.mark.parametrize("n", range(2, 31))
    def test_matches_closed_form(self, n):
        assert binomial_collapse(n) == count_total_trees(n)
