"""Quantile-based calibration of indifference and preference thresholds.

Thresholds for a criterion come from the spread of that criterion inside the
sample itself: q is the alpha% quantile and p the beta% quantile of the
absolute pairwise differences over unordered distinct pairs, so a fixed share
of comparisons lands in each of the indifferent / partially preferred / fully
preferred bands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import InvalidInputError
from .performance import PerformanceMatrix
from .preferences import Thresholds


@dataclass(frozen=True)
class TuningConfig:
    """Quantile levels, in percent, for the two thresholds."""

    alpha: float = 25.0
    beta: float = 75.0

    def __post_init__(self):
        ok = (math.isfinite(self.alpha) and math.isfinite(self.beta)
              and 0.0 <= self.alpha <= self.beta <= 100.0)
        if not ok:
            raise InvalidInputError(
                "quantile levels must satisfy 0 <= alpha <= beta <= 100, "
                f"got alpha={self.alpha}, beta={self.beta}")


def quantile(values, z: float) -> float:
    """z% quantile with linear interpolation between order statistics.

    With the sample sorted ascending as v_0..v_{N-1} and h = (N-1) * z / 100,
    the result is v_floor(h) + (h - floor(h)) * (v_floor(h)+1 - v_floor(h)),
    which makes z = 0 and z = 100 the exact minimum and maximum.
    """
    data = sorted(float(v) for v in values)
    if not data:
        raise InvalidInputError("quantile of an empty sample is undefined")
    if not (math.isfinite(z) and 0.0 <= z <= 100.0):
        raise InvalidInputError(f"quantile level must be in [0, 100], got {z}")
    h = (len(data) - 1) * z / 100.0
    low = math.floor(h)
    frac = h - low
    if frac == 0.0:
        return data[low]
    return data[low] + frac * (data[low + 1] - data[low])


def pairwise_absolute_differences(values) -> list[float]:
    """|v_i - v_j| over unordered distinct index pairs; tied values contribute zeros."""
    data = [float(v) for v in values]
    if len(data) < 2:
        raise InvalidInputError("need at least two values to form pairwise differences")
    return [abs(a - b) for i, a in enumerate(data) for b in data[i + 1:]]


def tune_thresholds(values, config: TuningConfig = TuningConfig()) -> Thresholds:
    """Thresholds from the quantiles of the pairwise absolute differences.

    q <= p is guaranteed by quantile monotonicity. sigma is filled with the
    midpoint (q + p) / 2 when that is positive, so Gaussian preference
    functions can run directly on tuned thresholds; it stays unset for a fully
    tied sample.
    """
    diffs = pairwise_absolute_differences(values)
    q = quantile(diffs, config.alpha)
    p = quantile(diffs, config.beta)
    mid = (q + p) / 2.0
    return Thresholds(q=q, p=p, sigma=mid if mid > 0.0 else None)


def tune_all(perf: PerformanceMatrix,
             config: TuningConfig = TuningConfig()) -> dict[str, Thresholds]:
    """Tuned thresholds for every criterion column of a performance matrix."""
    return {c: tune_thresholds(perf.column(c), config) for c in perf.criteria}
