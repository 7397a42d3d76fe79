import math

import numpy as np
import pytest
import scipy.special
import scipy.stats

from outrank import (DegenerateDataError, InvalidInputError, anova_oneway,
                     correlation_p_value, correlation_significant,
                     pearson_correlation, regularized_incomplete_beta,
                     student_t_two_sided_p)


class TestPearson:
    def test_perfect_positive(self):
        assert pearson_correlation([1, 2, 3], [1, 2, 3]) == pytest.approx(1.0)

    def test_perfect_negative(self):
        assert pearson_correlation([1, 2, 3], [-1, -2, -3]) == pytest.approx(-1.0)

    def test_hand_computed_value(self):
        assert pearson_correlation([1, 2, 3, 4], [2, 1, 4, 3]) == pytest.approx(0.6)

    def test_length_mismatch(self):
        with pytest.raises(InvalidInputError):
            pearson_correlation([1, 2], [1, 2, 3])

    def test_zero_variance(self):
        with pytest.raises(DegenerateDataError):
            pearson_correlation([1, 1, 1], [1, 2, 3])

    def test_too_short(self):
        with pytest.raises(InvalidInputError):
            pearson_correlation([1], [2])

    def test_affine_invariance(self):
        rng = np.random.default_rng(1)
        x = rng.normal(size=20).tolist()
        y = rng.normal(size=20).tolist()
        base = pearson_correlation(x, y)
        shifted = pearson_correlation([3 * v + 7 for v in x], y)
        flipped = pearson_correlation([-2 * v + 1 for v in x], y)
        assert shifted == pytest.approx(base, abs=1e-12)
        assert flipped == pytest.approx(-base, abs=1e-12)

    def test_matches_scipy(self):
        rng = np.random.default_rng(2)
        for _ in range(25):
            x = rng.normal(size=12)
            y = rng.normal(size=12)
            expected = scipy.stats.pearsonr(x, y).statistic
            assert pearson_correlation(x, y) == pytest.approx(expected, abs=1e-12)


class TestAnova:
    def test_equal_group_means(self):
        result = anova_oneway([[1, 2], [1, 2]])
        assert result.f_stat == 0.0
        assert result.p_value == 1.0

    def test_hand_computed_case(self):
        result = anova_oneway([[1, 2], [3, 4]])
        assert result.f_stat == pytest.approx(8.0, abs=1e-12)
        assert (result.df_between, result.df_within) == (1, 2)
        # Closed form through the two-sided Student-t tail with 2 dof.
        assert result.p_value == pytest.approx(1.0 - math.sqrt(0.8), abs=1e-10)
        assert result.group_means == (1.5, 3.5)

    def test_degenerate_within_variance(self):
        with pytest.raises(DegenerateDataError):
            anova_oneway([[1, 1], [2, 2]])

    def test_needs_two_groups(self):
        with pytest.raises(InvalidInputError):
            anova_oneway([[1, 2, 3]])

    def test_empty_group_rejected(self):
        with pytest.raises(InvalidInputError):
            anova_oneway([[1, 2], []])

    def test_needs_more_observations_than_groups(self):
        with pytest.raises(InvalidInputError):
            anova_oneway([[1], [2]])

    def test_translation_and_scale_invariance(self):
        groups = [[1.0, 2.0, 4.0], [2.5, 3.5], [0.5, 5.0, 6.0]]
        base = anova_oneway(groups)
        shifted = anova_oneway([[v + 11.0 for v in g] for g in groups])
        scaled = anova_oneway([[v * 4.0 for v in g] for g in groups])
        assert shifted.f_stat == pytest.approx(base.f_stat, rel=1e-9)
        assert scaled.f_stat == pytest.approx(base.f_stat, rel=1e-9)

    def test_matches_scipy(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            groups = [rng.normal(loc=rng.uniform(-1, 1), size=int(rng.integers(2, 9)))
                      for _ in range(int(rng.integers(2, 5)))]
            result = anova_oneway([g.tolist() for g in groups])
            expected = scipy.stats.f_oneway(*groups)
            assert result.f_stat == pytest.approx(expected.statistic, rel=1e-10)
            assert result.p_value == pytest.approx(expected.pvalue, abs=1e-10)


class TestIncompleteBeta:
    def test_uniform_case_is_identity(self):
        for x in (0.0, 0.25, 1.0):
            assert regularized_incomplete_beta(1, 1, x) == pytest.approx(x, abs=1e-12)

    def test_boundaries(self):
        assert regularized_incomplete_beta(3.2, 0.7, 0.0) == 0.0
        assert regularized_incomplete_beta(3.2, 0.7, 1.0) == 1.0

    def test_symmetric_midpoint(self):
        for a in (0.5, 2.0, 7.0):
            assert regularized_incomplete_beta(a, a, 0.5) == pytest.approx(0.5, abs=1e-10)

    def test_complement_identity(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            a, b = rng.uniform(0.1, 20, size=2)
            x = float(rng.uniform(0, 1))
            lhs = regularized_incomplete_beta(a, b, x)
            rhs = regularized_incomplete_beta(b, a, 1.0 - x)
            assert lhs + rhs == pytest.approx(1.0, abs=1e-10)

    def test_monotone_in_x(self):
        xs = np.linspace(0, 1, 50)
        values = [regularized_incomplete_beta(2.5, 1.5, x) for x in xs]
        assert all(v2 >= v1 - 1e-14 for v1, v2 in zip(values, values[1:]))

    def test_matches_scipy(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            a, b = rng.uniform(0.05, 50, size=2)
            x = float(rng.uniform(0, 1))
            expected = scipy.special.betainc(a, b, x)
            assert regularized_incomplete_beta(a, b, x) == pytest.approx(
                expected, abs=1e-10)

    def test_parameter_validation(self):
        with pytest.raises(InvalidInputError):
            regularized_incomplete_beta(0.0, 1.0, 0.5)
        with pytest.raises(InvalidInputError):
            regularized_incomplete_beta(1.0, -2.0, 0.5)
        with pytest.raises(InvalidInputError):
            regularized_incomplete_beta(1.0, 1.0, 1.5)


class TestStudentTails:
    def test_f_with_one_numerator_dof_matches_t(self):
        # Upper F(1, d) tail of t^2 equals the two-sided t tail with d dof.
        rng = np.random.default_rng(6)
        for _ in range(50):
            d = int(rng.integers(1, 40))
            t = float(rng.uniform(0.01, 6.0))
            via_anova_backend = regularized_incomplete_beta(
                d / 2.0, 0.5, d / (d + t * t))
            expected = 2.0 * scipy.stats.t.sf(t, df=d)
            assert via_anova_backend == pytest.approx(expected, abs=1e-8)
            assert student_t_two_sided_p(t, d) == pytest.approx(expected, abs=1e-8)

    def test_zero_statistic_gives_p_one(self):
        assert student_t_two_sided_p(0.0, 5) == pytest.approx(1.0, abs=1e-12)

    def test_correlation_significance_threshold(self):
        # r = 0.6 with n = 12: t = 0.6*sqrt(10/0.64) = 2.372, p ~ 0.039 < 0.05.
        assert correlation_significant(0.6, 12)
        assert not correlation_significant(0.3, 12)

    def test_correlation_p_matches_scipy(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            x = rng.normal(size=15)
            y = rng.normal(size=15)
            r = pearson_correlation(x, y)
            expected = scipy.stats.pearsonr(x, y).pvalue
            assert correlation_p_value(r, 15) == pytest.approx(expected, abs=1e-8)

    def test_extreme_correlation_p_zero(self):
        assert correlation_p_value(1.0, 10) == 0.0

    def test_too_small_sample_rejected(self):
        with pytest.raises(InvalidInputError):
            correlation_p_value(0.5, 2)
