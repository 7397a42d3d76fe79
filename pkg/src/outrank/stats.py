"""Pearson correlation, one-way ANOVA and the incomplete-beta backend for p-values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .exceptions import DegenerateDataError, InvalidInputError

_MAX_CF_ITERATIONS = 400
_CF_EPS = 1e-16
_TINY = 1e-300

SIGNIFICANCE_LEVEL = 0.05


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    """Continued fraction for the incomplete beta integral (modified Lentz)."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, _MAX_CF_ITERATIONS + 1):
        m2 = 2 * m
        coeff = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + coeff * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + coeff / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        coeff = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + coeff * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + coeff / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b), accurate to about 1e-10 absolute.

    The continued fraction converges fast only for x below (a+1)/(a+b+2);
    larger x is folded through the symmetry I_x(a, b) = 1 - I_{1-x}(b, a).
    """
    if not (math.isfinite(a) and math.isfinite(b)) or a <= 0 or b <= 0:
        raise InvalidInputError(f"beta parameters must be positive and finite, got a={a}, b={b}")
    if not (math.isfinite(x) and 0.0 <= x <= 1.0):
        raise InvalidInputError(f"x must be in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        value = front * _beta_continued_fraction(a, b, x) / a
    else:
        value = 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b
    return min(max(value, 0.0), 1.0)


def pearson_correlation(x: Sequence[float], y: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient."""
    xs = [float(v) for v in x]
    ys = [float(v) for v in y]
    if len(xs) != len(ys):
        raise InvalidInputError(f"length mismatch: {len(xs)} vs {len(ys)}")
    n = len(xs)
    if n < 2:
        raise InvalidInputError("correlation requires at least two observations")
    if not all(math.isfinite(v) for v in xs + ys):
        raise InvalidInputError("observations must be finite")
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    sxx = sum((v - mean_x) ** 2 for v in xs)
    syy = sum((v - mean_y) ** 2 for v in ys)
    if sxx <= 0.0 or syy <= 0.0:
        raise DegenerateDataError("correlation is undefined for a zero-variance sample")
    sxy = sum((a - mean_x) * (b - mean_y) for a, b in zip(xs, ys))
    r = sxy / math.sqrt(sxx * syy)
    return min(max(r, -1.0), 1.0)


@dataclass(frozen=True)
class AnovaResult:
    """Classic one-way fixed-effects F test."""

    f_stat: float
    df_between: int
    df_within: int
    p_value: float
    group_means: tuple[float, ...]


def anova_oneway(groups: Sequence[Sequence[float]]) -> AnovaResult:
    """One-way ANOVA over two or more nonempty groups.

    F compares the between-group to the pooled within-group mean square; the
    p-value is the upper F tail evaluated through the regularized incomplete
    beta function. Zero pooled within-group variance is rejected as degenerate.
    """
    data = [[float(v) for v in group] for group in groups]
    if len(data) < 2:
        raise InvalidInputError("ANOVA requires at least two groups")
    if any(len(group) == 0 for group in data):
        raise InvalidInputError("ANOVA groups must be nonempty")
    if not all(math.isfinite(v) for group in data for v in group):
        raise InvalidInputError("observations must be finite")
    total_n = sum(len(group) for group in data)
    n_groups = len(data)
    if total_n <= n_groups:
        raise InvalidInputError("ANOVA requires more observations than groups")
    grand_mean = sum(v for group in data for v in group) / total_n
    means = [sum(group) / len(group) for group in data]
    ss_between = sum(len(group) * (mean - grand_mean) ** 2
                     for group, mean in zip(data, means))
    ss_within = sum((v - mean) ** 2
                    for group, mean in zip(data, means) for v in group)
    df_between = n_groups - 1
    df_within = total_n - n_groups
    if ss_within <= 0.0:
        raise DegenerateDataError("zero within-group variance; F statistic is unbounded")
    f_stat = (ss_between / df_between) / (ss_within / df_within)
    p_value = regularized_incomplete_beta(
        df_within / 2.0, df_between / 2.0,
        df_within / (df_within + df_between * f_stat))
    return AnovaResult(f_stat=f_stat, df_between=df_between, df_within=df_within,
                       p_value=p_value, group_means=tuple(means))


def student_t_two_sided_p(t: float, df: int) -> float:
    """Two-sided tail probability of Student's t with ``df`` degrees of freedom."""
    if df < 1:
        raise InvalidInputError(f"degrees of freedom must be >= 1, got {df}")
    if not math.isfinite(t):
        raise InvalidInputError("t statistic must be finite")
    return regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t))


def correlation_p_value(r: float, n: int) -> float:
    """Two-sided p-value for zero correlation via the t transform with n-2 dof."""
    if n < 3:
        raise InvalidInputError("correlation significance requires n >= 3")
    if not (math.isfinite(r) and -1.0 <= r <= 1.0):
        raise InvalidInputError(f"correlation must be in [-1, 1], got {r}")
    if abs(r) >= 1.0:
        return 0.0
    t = r * math.sqrt((n - 2) / (1.0 - r * r))
    return student_t_two_sided_p(t, n - 2)


def correlation_significant(r: float, n: int, level: float = SIGNIFICANCE_LEVEL) -> bool:
    """Whether r differs from zero at the given two-sided level (default 5%)."""
    return correlation_p_value(r, n) < level
