import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from outrank import (InvalidInputError, PreferenceFunctionSpec, PreferenceKind,
                     Thresholds, preference_degree, preference_degrees)

import oracles


def spec(kind, q=0.0, p=0.0, sigma=None):
    return PreferenceFunctionSpec(PreferenceKind(kind), Thresholds(q=q, p=p, sigma=sigma))


class TestKnownValues:
    def test_usual_zero_difference_is_indifferent(self):
        assert preference_degree(spec("usual"), 0.0) == 0.0

    def test_usual_positive_difference_is_full_preference(self):
        assert preference_degree(spec("usual"), 1e-9) == 1.0

    @pytest.mark.parametrize("kind,q,p,sigma", [
        ("usual", 0, 0, None), ("u_shape", 1, 1, None), ("v_shape", 0, 2, None),
        ("level", 1, 2, None), ("v_shape_indifference", 1, 2, None),
        ("gaussian", 0, 0, 2.0),
    ])
    def test_nonpositive_difference_never_preferred(self, kind, q, p, sigma):
        s = spec(kind, q, p, sigma)
        for d in (-5.0, -1e-12, 0.0):
            assert preference_degree(s, d) == 0.0

    def test_ramp_midpoint(self):
        assert preference_degree(spec("v_shape_indifference", q=1, p=2), 1.5) == 0.5

    def test_gaussian_value(self):
        got = preference_degree(spec("gaussian", sigma=2.0), 2.0)
        assert got == pytest.approx(1.0 - math.exp(-0.5), abs=1e-15)


class TestBreakpoints:
    """Closed-form values at the shape breakpoints, q=1, p=2, sigma=2."""

    GRID = (-1.0, 0.0, 1.0, 1.5, 2.0, 3.0)

    EXPECTED = {
        "usual": (0.0, 0.0, 1.0, 1.0, 1.0, 1.0),
        "u_shape": (0.0, 0.0, 0.0, 1.0, 1.0, 1.0),
        "v_shape": (0.0, 0.0, 0.5, 0.75, 1.0, 1.0),
        "level": (0.0, 0.0, 0.0, 0.5, 0.5, 1.0),
        "v_shape_indifference": (0.0, 0.0, 0.0, 0.5, 1.0, 1.0),
        "gaussian": (0.0, 0.0, 1.0 - math.exp(-1.0 / 8.0),
                     1.0 - math.exp(-9.0 / 32.0), 1.0 - math.exp(-0.5),
                     1.0 - math.exp(-9.0 / 8.0)),
    }

    @pytest.mark.parametrize("kind", sorted(EXPECTED))
    def test_breakpoints(self, kind):
        s = spec(kind, q=1.0, p=2.0, sigma=2.0)
        for d, expected in zip(self.GRID, self.EXPECTED[kind]):
            assert preference_degree(s, d) == pytest.approx(expected, abs=1e-15), \
                f"{kind} at d={d}"


class TestDegenerateThresholds:
    def test_equal_thresholds_collapse_ramp_to_step(self):
        s = spec("v_shape_indifference", q=1.5, p=1.5)
        assert preference_degree(s, 1.5) == 0.0
        assert preference_degree(s, 1.5000001) == 1.0

    def test_equal_thresholds_collapse_level_to_step(self):
        s = spec("level", q=1.5, p=1.5)
        assert preference_degree(s, 1.5) == 0.0
        assert preference_degree(s, 2.0) == 1.0

    def test_zero_p_collapses_v_shape_to_usual(self):
        s = spec("v_shape", p=0.0)
        assert preference_degree(s, 0.0) == 0.0
        assert preference_degree(s, 0.5) == 1.0

    def test_both_zero_ramp_is_step_at_zero(self):
        s = spec("v_shape_indifference", q=0.0, p=0.0)
        assert preference_degree(s, 0.0) == 0.0
        assert preference_degree(s, 1e-12) == 1.0


class TestValidation:
    def test_non_finite_difference_rejected(self):
        for bad in (float("nan"), float("inf")):
            with pytest.raises(InvalidInputError):
                preference_degree(spec("usual"), bad)

    def test_q_above_p_rejected(self):
        with pytest.raises(InvalidInputError):
            Thresholds(q=2.0, p=1.0)

    def test_negative_thresholds_rejected(self):
        with pytest.raises(InvalidInputError):
            Thresholds(q=-0.1, p=1.0)

    def test_nonpositive_sigma_rejected(self):
        with pytest.raises(InvalidInputError):
            Thresholds(sigma=0.0)

    def test_gaussian_requires_sigma(self):
        with pytest.raises(InvalidInputError):
            PreferenceFunctionSpec(PreferenceKind.GAUSSIAN, Thresholds())


threshold_pairs = st.tuples(
    st.floats(min_value=0, max_value=50, allow_nan=False),
    st.floats(min_value=0, max_value=50, allow_nan=False),
).map(lambda qp: (min(qp), max(qp)))


class TestProperties:
    @given(kind=st.sampled_from(sorted(k.value for k in PreferenceKind)),
           qp=threshold_pairs,
           sigma=st.floats(min_value=0.01, max_value=100, allow_nan=False),
           d1=st.floats(min_value=-100, max_value=100, allow_nan=False),
           d2=st.floats(min_value=-100, max_value=100, allow_nan=False))
    def test_monotone_bounded_and_clamped(self, kind, qp, sigma, d1, d2):
        q, p = qp
        s = spec(kind, q=q, p=p, sigma=sigma)
        lo, hi = sorted((d1, d2))
        h_lo, h_hi = preference_degree(s, lo), preference_degree(s, hi)
        assert 0.0 <= h_lo <= 1.0 and 0.0 <= h_hi <= 1.0
        assert h_lo <= h_hi
        if hi <= 0:
            assert h_hi == 0.0

    def test_vectorised_matches_scalar_reference(self):
        rng = np.random.default_rng(7)
        grid = rng.uniform(-5, 5, size=60)
        for kind in PreferenceKind:
            s = spec(kind.value, q=0.5, p=1.7, sigma=1.2)
            vec = preference_degrees(s, grid)
            for d, got in zip(grid, vec):
                expected = oracles.degree(kind.value, float(d), q=0.5, p=1.7, sigma=1.2)
                assert got == pytest.approx(expected, abs=1e-15)
