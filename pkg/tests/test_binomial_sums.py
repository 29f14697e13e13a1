import math
from fractions import Fraction

import pytest

from binpart import (
    DiagonalTable,
    PnkTriangle,
    binomial_ratio,
    build_triangle,
    check_growth_conditions,
    closed_form_even,
    closed_form_odd,
    dominance_check,
    enumerate_partitions,
    iter_triangle_rows,
    peak_k,
    peak_sign_sum,
    pnk_direct,
    verify_unimodal_profile,
    weighted_binomial_sum,
)
from binpart.binomial_sums import partial_sign_sum_ratio

from reference_values import P50K_VALUES


class TestDirectSum:
    @pytest.mark.parametrize("k,expected", [(1, 51), (3, 20875), (26, 412637434996367)])
    def test_row50_values(self, k, expected, table_2001):
        assert pnk_direct(50, k, table_2001) == expected

    def test_k_zero_is_one(self, table_2001):
        for n in (0, 1, 17, 240):
            assert pnk_direct(n, 0, table_2001) == 1

    def test_hand_sum_4_3(self, table_2001):
        # C(4,3)*1 + C(3,2)*1 + C(2,1)*2 + C(1,0)*3 = 4 + 3 + 4 + 3
        assert pnk_direct(4, 3, table_2001) == 14

    def test_brute_force_10_5(self, table_2001):
        by_oracle = sum(
            math.comb(10 - j, 5 - j) * len(enumerate_partitions(j, max(j, 1)))
            for j in range(6)
        )
        assert by_oracle == 590
        assert pnk_direct(10, 5, table_2001) == 590

    def test_domain_errors(self, table_2001):
        with pytest.raises(ValueError):
            pnk_direct(5, 6, table_2001)
        with pytest.raises(ValueError):
            pnk_direct(5, -1, table_2001)


class TestTriangle:
    def test_row50_matches_golden(self, triangle_120):
        assert list(triangle_120.row(50)[1:]) == P50K_VALUES

    def test_diagonal_prefix_sums(self, triangle_120, table_2001):
        assert triangle_120.value(2, 2) == 4  # 1 + 1 + 2
        acc = 0
        for n in range(61):
            acc += table_2001[n]
            assert triangle_120.value(n, n) == acc

    def test_column_one(self, triangle_120):
        for n in range(1, 121):
            assert triangle_120.value(n, 1) == n + 1

    def test_full_direct_agreement_small(self, triangle_120, table_2001):
        for n in range(41):
            for k in range(n + 1):
                assert triangle_120.value(n, k) == pnk_direct(n, k, table_2001)

    def test_recursion_identity(self, triangle_120):
        for n in range(120):
            for k in range(1, n + 1):
                assert triangle_120.value(n + 1, k) == (
                    triangle_120.value(n, k) + triangle_120.value(n, k - 1)
                )

    def test_streaming_matches_built(self, triangle_120, table_2001):
        for n, row in iter_triangle_rows(80, table_2001):
            assert row == triangle_120.row(n)

    def test_range_errors(self, triangle_120):
        with pytest.raises(ValueError):
            triangle_120.row(121)
        with pytest.raises(ValueError):
            triangle_120.value(10, 11)


class TestDiagonalTable:
    def test_agrees_with_triangle(self, triangle_120, table_2001):
        diag = DiagonalTable(120, table_2001)
        for n in range(1, 121):
            assert diag.value(n, n) == triangle_120.value(n, n)
            assert diag.value(n, n - 1) == triangle_120.value(n, n - 1)

    def test_golden_corner_values(self, diagonal_2001):
        assert diagonal_2001.value(50, 50) == 1295971
        assert diagonal_2001.value(50, 49) == 6547151

    def test_only_two_columns(self, diagonal_2001):
        with pytest.raises(ValueError):
            diagonal_2001.value(10, 8)


class TestWeightedSum:
    def test_hockey_stick(self):
        one = lambda j: 1
        for n in range(201):
            for ell in range(n + 1):
                assert weighted_binomial_sum(one, n, ell) == math.comb(n + 1, ell + 1)

    def test_partition_weights_reproduce_pnk(self, triangle_120, table_2001):
        f = lambda j: table_2001[j]
        for n in range(35):
            for k in range(n + 1):
                assert weighted_binomial_sum(f, n, n - k) == triangle_120.value(n, k)

    def test_tie_at_n3(self, table_2001):
        f = lambda j: table_2001[j]
        assert weighted_binomial_sum(f, 3, 0) == 7
        assert weighted_binomial_sum(f, 3, 1) == 7


class TestGrowthConditions:
    def test_partition_function_passes(self, table_2001):
        report = check_growth_conditions(lambda n: table_2001[n], 400)
        assert report.all_hold

    def test_constant_one(self):
        report = check_growth_conditions(lambda n: 1, 50)
        assert report.holds_a and report.holds_b and report.holds_c

    def test_powers_of_two_fail_c(self):
        report = check_growth_conditions(lambda n: 2**n, 50)
        assert report.holds_b
        assert not report.holds_c
        assert report.counterexample_c == 3  # 8 < 1+2+4 is false
        assert not report.holds_a  # f(3)=8 also breaks f(3) <= 2f(0)+f(1)

    def test_needs_room(self):
        with pytest.raises(ValueError):
            check_growth_conditions(lambda n: 1, 2)


class TestPeak:
    @pytest.mark.parametrize("n,expected", [(4, 3), (11, 7), (50, 26), (1000, 501)])
    def test_formula(self, n, expected):
        assert peak_k(n) == expected

    def test_small_n_rejected(self):
        for n in (0, 1, 2, 3):
            with pytest.raises(ValueError):
                peak_k(n)

    def test_scan_agrees_row11(self, triangle_120):
        row = triangle_120.row(11)
        argmax = max(range(1, 12), key=lambda k: row[k])
        assert argmax == peak_k(11) == 7

    def test_row4_shape(self, triangle_120):
        assert triangle_120.row(4)[1:] == (5, 11, 14, 12)


class TestUnimodalProfile:
    def test_row4(self, triangle_120):
        profile = verify_unimodal_profile(4, triangle_120)
        assert profile.ok
        assert profile.peak_k == 3
        assert profile.values == (5, 11, 14, 12)

    def test_row50(self, triangle_120):
        profile = verify_unimodal_profile(50, triangle_120)
        assert profile.ok and profile.strict_up and profile.strict_down
        assert profile.peak_k == 26

    def test_sweep_to_120(self, triangle_120):
        for n in range(4, 121):
            assert verify_unimodal_profile(n, triangle_120).ok

    def test_violation_reported(self):
        # hand-built triangle with a flat step in row 4
        fake = PnkTriangle(rows=(
            (1,), (1, 2), (1, 3, 4), (1, 4, 7, 7), (1, 5, 11, 11, 12),
        ))
        profile = verify_unimodal_profile(4, fake)
        assert not profile.ok
        assert profile.first_violation == (4, 2)

    def test_small_n_rejected(self, triangle_120):
        with pytest.raises(ValueError):
            verify_unimodal_profile(3, triangle_120)


class TestBinomialRatio:
    def test_j_zero(self):
        assert binomial_ratio(9, 4, 0) == 1

    def test_single_factor(self):
        for n in range(2, 12):
            for k in range(1, n + 1):
                assert binomial_ratio(n, k, 1) == Fraction(k, n)

    def test_explicit_product(self):
        assert binomial_ratio(10, 6, 3) == Fraction(1, 6)

    def test_bounded_by_power(self):
        for n in range(1, 101):
            for k in range(1, n + 1):
                q = Fraction(k, n)
                q_power = Fraction(1)
                for j in range(1, k + 1):
                    q_power *= q
                    assert binomial_ratio(n, k, j) <= q_power


class TestSignSums:
    def test_ties_recursion(self, triangle_120, table_2001):
        # S(n,k) = (n+1-k) * (2*p(n,k) - p(n+1,k))
        for n in range(4, 60):
            for k in range(1, n + 1):
                lhs = peak_sign_sum(n, k, table_2001)
                rhs = (n + 1 - k) * (
                    2 * triangle_120.value(n, k) - triangle_120.value(n + 1, k)
                )
                assert lhs == rhs, (n, k)

    def test_signs_at_peak(self, table_2001):
        for n in range(4, 201):
            k = peak_k(n)
            assert peak_sign_sum(n, k, table_2001) > 0, n
            assert peak_sign_sum(n, k + 1, table_2001) < 0, n

    def test_even_closed_form(self, table_2001):
        for n in (4, 10, 100, 200, 500):
            k = (n + 2) // 2
            assert partial_sign_sum_ratio(n, k, 3, table_2001) == closed_form_even(n)

    def test_odd_closed_form(self, table_2001):
        for n in (11, 101, 201, 501):
            k = (n + 3) // 2
            assert partial_sign_sum_ratio(n, k, 7, table_2001) == closed_form_odd(n)

    def test_closed_form_domains(self):
        with pytest.raises(ValueError):
            closed_form_even(5)
        with pytest.raises(ValueError):
            closed_form_odd(9)


class TestDominance:
    def test_row50_k28(self, triangle_120):
        assert 512 * triangle_120.value(50, 28) > 1745 * math.comb(50, 28)
        assert dominance_check(50, triangle_120) is None

    def test_n4(self, triangle_120):
        # p(4,4) = 12 far above (1745/512)*C(4,4) ~ 3.41
        assert dominance_check(4, triangle_120) is None

    def test_sweep_to_120(self, triangle_120):
        for n in range(4, 121):
            assert dominance_check(n, triangle_120) is None
