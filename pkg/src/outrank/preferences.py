"""Preference functions mapping pairwise differences to degrees in [0, 1].

Six canonical shapes are supported: a strict step, a step with an
indifference band, a linear ramp, a two-level staircase, a ramp with an
indifference band, and a Gaussian saturation curve. They share one
convention: a nonpositive difference never yields preference, so every
function returns 0 for d <= 0 and preference in the other direction is
carried by the transposed pair.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import InvalidInputError


class PreferenceKind(enum.Enum):
    """Shape of a preference function."""

    USUAL = "usual"
    U_SHAPE = "u_shape"
    V_SHAPE = "v_shape"
    LEVEL = "level"
    V_SHAPE_INDIFFERENCE = "v_shape_indifference"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class Thresholds:
    """Indifference (q), preference (p) and Gaussian inflection (sigma) parameters.

    Fields a given function kind does not use are ignored, but still have to
    be in range when present. ``q == p`` is allowed and collapses the ramp
    and staircase shapes to a step at q.
    """

    q: float = 0.0
    p: float = 0.0
    sigma: float | None = None

    def __post_init__(self):
        if not math.isfinite(self.q) or self.q < 0:
            raise InvalidInputError(
                f"indifference threshold q must be finite and >= 0, got {self.q}")
        if not math.isfinite(self.p) or self.p < 0:
            raise InvalidInputError(
                f"preference threshold p must be finite and >= 0, got {self.p}")
        if self.q > self.p:
            raise InvalidInputError(
                f"thresholds must satisfy q <= p, got q={self.q}, p={self.p}")
        if self.sigma is not None and (not math.isfinite(self.sigma) or self.sigma <= 0):
            raise InvalidInputError(
                f"sigma must be finite and > 0 when present, got {self.sigma}")


@dataclass(frozen=True)
class PreferenceFunctionSpec:
    """A preference-function kind plus the thresholds it needs."""

    kind: PreferenceKind
    thresholds: Thresholds = field(default_factory=Thresholds)

    def __post_init__(self):
        if self.kind is PreferenceKind.GAUSSIAN and self.thresholds.sigma is None:
            raise InvalidInputError("gaussian preference functions require sigma > 0")


def preference_degrees(spec: PreferenceFunctionSpec, differences) -> np.ndarray:
    """Vectorised preference degrees for an array of pairwise differences.

    Nondecreasing in the difference, 0 for every d <= 0, and never above 1.
    """
    d = np.asarray(differences, dtype=np.float64)
    if not np.all(np.isfinite(d)):
        raise InvalidInputError("differences must be finite")
    t = spec.thresholds
    out = np.zeros(d.shape, dtype=np.float64)
    kind = spec.kind
    if kind is PreferenceKind.USUAL:
        out[d > 0.0] = 1.0
    elif kind is PreferenceKind.U_SHAPE:
        out[d > t.q] = 1.0
    elif kind is PreferenceKind.V_SHAPE:
        if t.p == 0.0:
            out[d > 0.0] = 1.0
        else:
            ramp = (d > 0.0) & (d <= t.p)
            out[ramp] = d[ramp] / t.p
            out[d > t.p] = 1.0
    elif kind is PreferenceKind.LEVEL:
        if t.q == t.p:
            out[d > t.q] = 1.0
        else:
            out[(d > t.q) & (d <= t.p)] = 0.5
            out[d > t.p] = 1.0
    elif kind is PreferenceKind.V_SHAPE_INDIFFERENCE:
        if t.q == t.p:
            out[d > t.q] = 1.0
        else:
            ramp = (d > t.q) & (d <= t.p)
            out[ramp] = (d[ramp] - t.q) / (t.p - t.q)
            out[d > t.p] = 1.0
    else:  # GAUSSIAN; sigma presence enforced by PreferenceFunctionSpec
        pos = d > 0.0
        out[pos] = 1.0 - np.exp(-(d[pos] ** 2) / (2.0 * t.sigma * t.sigma))
    return out


def preference_degree(spec: PreferenceFunctionSpec, d: float) -> float:
    """Preference degree for a single difference."""
    value = float(d)
    if not math.isfinite(value):
        raise InvalidInputError(f"difference must be finite, got {d!r}")
    return float(preference_degrees(spec, np.array([value]))[0])
