"""Evaluation tables (alternatives x criteria) and per-criterion configuration."""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .exceptions import ConfigurationError, InvalidInputError, NotFoundError
from .preferences import PreferenceFunctionSpec, PreferenceKind

WEIGHT_SUM_TOL = 1e-9


class Direction(enum.Enum):
    """Whether larger or smaller criterion results are better."""

    MAXIMIZE = "max"
    MINIMIZE = "min"


@dataclass(frozen=True)
class PerformanceMatrix:
    """Immutable table of results: one row per alternative, one column per criterion."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(str(a) for a in self.alternatives))
        object.__setattr__(self, "criteria", tuple(str(c) for c in self.criteria))
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise InvalidInputError(f"values must be a 2-d table, got shape {values.shape}")
        if values.shape != (len(self.alternatives), len(self.criteria)):
            raise InvalidInputError(
                f"values shape {values.shape} does not match "
                f"{len(self.alternatives)} alternatives x {len(self.criteria)} criteria")
        if not np.all(np.isfinite(values)):
            raise InvalidInputError("performance values must all be finite")
        if len(set(self.alternatives)) != len(self.alternatives):
            raise InvalidInputError("alternative ids must be pairwise distinct")
        if len(set(self.criteria)) != len(self.criteria):
            raise InvalidInputError("criterion ids must be pairwise distinct")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n_alternatives(self) -> int:
        return len(self.alternatives)

    @property
    def n_criteria(self) -> int:
        return len(self.criteria)

    def criterion_index(self, criterion: str) -> int:
        try:
            return self.criteria.index(criterion)
        except ValueError:
            raise NotFoundError(f"unknown criterion {criterion!r}") from None

    def column(self, criterion: str) -> np.ndarray:
        return self.values[:, self.criterion_index(criterion)]


@dataclass(frozen=True)
class CriterionSpec:
    """A criterion id with its direction, importance weight and preference function."""

    id: str
    direction: Direction = Direction.MAXIMIZE
    weight: float = 1.0
    preference: PreferenceFunctionSpec = field(
        default_factory=lambda: PreferenceFunctionSpec(PreferenceKind.USUAL))

    def __post_init__(self):
        if not math.isfinite(self.weight) or self.weight < 0:
            raise InvalidInputError(
                f"criterion weight must be finite and >= 0, got {self.weight}")


def normalized_weights(criteria: Sequence[CriterionSpec]) -> list[CriterionSpec]:
    """Rescale criterion weights so they sum to one.

    Totals already within 1e-9 of one pass through unchanged; anything else is
    rescaled with a warning so unnormalised configurations stay visible.
    """
    total = sum(spec.weight for spec in criteria)
    if total <= 0:
        raise ConfigurationError("criterion weights must have a positive sum")
    if abs(total - 1.0) <= WEIGHT_SUM_TOL:
        return list(criteria)
    warnings.warn(f"criterion weights sum to {total:.6g}; rescaling to 1", stacklevel=2)
    return [replace(spec, weight=spec.weight / total) for spec in criteria]
