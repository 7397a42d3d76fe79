import numpy as np
import pytest
from hypothesis import given, strategies as st

from outrank import (InvalidInputError, PerformanceMatrix, TuningConfig,
                     pairwise_absolute_differences, quantile, tune_all,
                     tune_thresholds)

import oracles


class TestQuantile:
    def test_interpolates_between_order_statistics(self):
        assert quantile([0, 1, 2, 3], 50) == 1.5

    def test_single_element(self):
        for z in (0, 13.7, 50, 100):
            assert quantile([7], z) == 7

    def test_extremes_are_min_and_max(self):
        assert quantile([4, 1, 9], 0) == 1
        assert quantile([4, 1, 9], 100) == 9

    def test_empty_sample_rejected(self):
        with pytest.raises(InvalidInputError):
            quantile([], 50)

    def test_level_out_of_range_rejected(self):
        for z in (-0.1, 100.1, float("nan")):
            with pytest.raises(InvalidInputError):
                quantile([1, 2], z)

    def test_matches_reference_on_random_samples(self):
        rng = np.random.default_rng(123)
        for _ in range(1000):
            size = int(rng.integers(1, 40))
            values = rng.normal(scale=10.0, size=size).tolist()
            z = float(rng.uniform(0, 100))
            assert quantile(values, z) == pytest.approx(
                oracles.reference_quantile(values, z), rel=1e-12, abs=1e-12)

    @given(values=st.lists(st.floats(min_value=-1e6, max_value=1e6), min_size=1,
                           max_size=30),
           z1=st.floats(min_value=0, max_value=100),
           z2=st.floats(min_value=0, max_value=100))
    def test_monotone_in_level(self, values, z1, z2):
        lo, hi = sorted((z1, z2))
        assert quantile(values, lo) <= quantile(values, hi)


class TestTuneThresholds:
    def test_known_sample(self):
        tuned = tune_thresholds([0, 1, 2, 3], TuningConfig(25, 75))
        assert tuned.q == 1.0
        assert tuned.p == 2.0

    def test_identical_values_degenerate(self):
        tuned = tune_thresholds([5, 5, 5], TuningConfig(25, 75))
        assert tuned.q == 0.0 and tuned.p == 0.0
        assert tuned.sigma is None

    def test_single_value_rejected(self):
        with pytest.raises(InvalidInputError):
            tune_thresholds([1.0])

    def test_q_never_exceeds_p(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            values = rng.normal(size=int(rng.integers(2, 15)))
            alpha = float(rng.uniform(0, 100))
            beta = float(rng.uniform(alpha, 100))
            tuned = tune_thresholds(values, TuningConfig(alpha, beta))
            assert tuned.q <= tuned.p

    def test_scale_equivariance(self):
        values = [1.0, 4.0, 2.5, 9.0]
        base = tune_thresholds(values, TuningConfig(25, 75))
        scaled = tune_thresholds([3.0 * v for v in values], TuningConfig(25, 75))
        assert scaled.q == pytest.approx(3.0 * base.q, rel=1e-12)
        assert scaled.p == pytest.approx(3.0 * base.p, rel=1e-12)

    def test_translation_invariance(self):
        values = [1.0, 4.0, 2.5, 9.0]
        base = tune_thresholds(values, TuningConfig(25, 75))
        shifted = tune_thresholds([v + 100.0 for v in values], TuningConfig(25, 75))
        assert shifted.q == pytest.approx(base.q, abs=1e-9)
        assert shifted.p == pytest.approx(base.p, abs=1e-9)

    def test_coverage_of_indifference_band(self):
        # With all pairwise gaps distinct, the share of gaps strictly below q
        # stays within 1/|D| of alpha.
        rng = np.random.default_rng(77)
        for _ in range(100):
            values = rng.uniform(0, 100, size=int(rng.integers(3, 20)))
            diffs = pairwise_absolute_differences(values)
            tuned = tune_thresholds(values, TuningConfig(25, 75))
            below_q = sum(1 for d in diffs if d < tuned.q) / len(diffs)
            above_p = sum(1 for d in diffs if d > tuned.p) / len(diffs)
            assert abs(below_q - 0.25) <= 1.0 / len(diffs) + 1e-12
            assert abs(above_p - 0.25) <= 1.0 / len(diffs) + 1e-12

    def test_alpha_equal_beta_allowed(self):
        tuned = tune_thresholds([0, 1, 2, 3], TuningConfig(50, 50))
        assert tuned.q == tuned.p


class TestTuneAll:
    def test_per_column_thresholds(self):
        perf = PerformanceMatrix(("a", "b", "c", "d"), ("c1", "c2"),
                                 [[0, 0], [1, 0], [2, 0], [3, 0]])
        tuned = tune_all(perf, TuningConfig(25, 75))
        assert (tuned["c1"].q, tuned["c1"].p) == (1.0, 2.0)
        assert (tuned["c2"].q, tuned["c2"].p) == (0.0, 0.0)

    def test_single_column(self):
        perf = PerformanceMatrix(("a", "b"), ("only",), [[0.0], [2.0]])
        tuned = tune_all(perf)
        assert set(tuned) == {"only"}

    def test_config_validation(self):
        with pytest.raises(InvalidInputError):
            TuningConfig(80, 20)
        with pytest.raises(InvalidInputError):
            TuningConfig(-1, 50)
        with pytest.raises(InvalidInputError):
            TuningConfig(0, 101)
