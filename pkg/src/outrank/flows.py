"""Pairwise preference indices and the positive/negative/net flows built from them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exceptions import ConfigurationError, InvalidInputError
from .performance import CriterionSpec, Direction, PerformanceMatrix, WEIGHT_SUM_TOL
from .preferences import preference_degrees

# Slack for float round-off when validating quantities that are exactly
# bounded in real arithmetic (weighted sums of degrees in [0, 1]).
_ENTRY_TOL = 1e-12
_FLOW_TOL = 1e-9


def difference_matrix(perf: PerformanceMatrix, criterion: str,
                      direction: Direction = Direction.MAXIMIZE) -> np.ndarray:
    """Signed pairwise result differences for one criterion.

    Entry (i, j) is positive when alternative i beats alternative j on this
    criterion under the given direction; the matrix is antisymmetric with a
    zero diagonal.
    """
    col = perf.column(criterion)
    diff = col[:, None] - col[None, :]
    if direction is Direction.MINIMIZE:
        diff = -diff
    return diff


def preference_index_matrix(perf: PerformanceMatrix,
                            criteria: Sequence[CriterionSpec]) -> np.ndarray:
    """Weighted aggregate preference of each alternative over each other.

    Weights must already sum to one (see ``normalized_weights``); entries land
    in [0, 1] with a zero diagonal.
    """
    total = sum(spec.weight for spec in criteria)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise ConfigurationError(
            f"criterion weights must sum to 1 within {WEIGHT_SUM_TOL}, got {total!r}; "
            "normalise them first")
    n = perf.n_alternatives
    index = np.zeros((n, n), dtype=np.float64)
    for spec in criteria:
        diff = difference_matrix(perf, spec.id, spec.direction)
        index += spec.weight * preference_degrees(spec.preference, diff)
    return index


@dataclass(frozen=True)
class FlowResult:
    """Positive, negative and net preference flow per alternative.

    ``phi_net`` is always the literal float difference ``phi_plus - phi_minus``;
    the constructor rejects anything else.
    """

    alternatives: tuple[str, ...]
    phi_plus: np.ndarray
    phi_minus: np.ndarray
    phi_net: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(str(a) for a in self.alternatives))
        n = len(self.alternatives)
        if len(set(self.alternatives)) != n:
            raise InvalidInputError("alternative ids must be pairwise distinct")
        arrays = {}
        for name in ("phi_plus", "phi_minus", "phi_net"):
            arr = np.array(getattr(self, name), dtype=np.float64)
            if arr.shape != (n,):
                raise InvalidInputError(f"{name} must have one entry per alternative")
            if not np.all(np.isfinite(arr)):
                raise InvalidInputError(f"{name} must be finite")
            arrays[name] = arr
        plus, minus, net = arrays["phi_plus"], arrays["phi_minus"], arrays["phi_net"]
        for name, arr in (("phi_plus", plus), ("phi_minus", minus)):
            if arr.min(initial=0.0) < -_FLOW_TOL or arr.max(initial=0.0) > 1.0 + _FLOW_TOL:
                raise InvalidInputError(f"{name} entries must lie in [0, 1]")
        if not np.array_equal(net, plus - minus):
            raise InvalidInputError("phi_net must equal phi_plus - phi_minus exactly")
        for arr in arrays.values():
            arr.setflags(write=False)
        object.__setattr__(self, "phi_plus", plus)
        object.__setattr__(self, "phi_minus", minus)
        object.__setattr__(self, "phi_net", net)

    @classmethod
    def from_arrays(cls, alternatives, phi_plus, phi_minus) -> "FlowResult":
        plus = np.asarray(phi_plus, dtype=np.float64)
        minus = np.asarray(phi_minus, dtype=np.float64)
        return cls(tuple(alternatives), plus, minus, plus - minus)

    def index_of(self, alternative: str) -> int:
        try:
            return self.alternatives.index(alternative)
        except ValueError:
            raise InvalidInputError(f"unknown alternative {alternative!r}") from None


def flows(preference_index, alternatives: Sequence[str] | None = None) -> FlowResult:
    """Average preference over the others (phi+) and of the others (phi-).

    Needs at least two alternatives; entries must form a square [0, 1] matrix
    with a zero diagonal. Net flows sum to zero up to round-off because both
    flows average the same matrix.
    """
    pref = np.asarray(preference_index, dtype=np.float64)
    if pref.ndim != 2 or pref.shape[0] != pref.shape[1]:
        raise InvalidInputError(f"preference index must be square, got shape {pref.shape}")
    n = pref.shape[0]
    if n < 2:
        raise InvalidInputError("flows are undefined for fewer than two alternatives")
    if not np.all(np.isfinite(pref)):
        raise InvalidInputError("preference indices must be finite")
    if pref.min() < -_ENTRY_TOL or pref.max() > 1.0 + _ENTRY_TOL:
        raise InvalidInputError("preference indices must lie in [0, 1]")
    if np.any(pref.diagonal() != 0.0):
        raise InvalidInputError("preference index diagonal must be zero")
    if alternatives is None:
        alternatives = tuple(f"a{i}" for i in range(n))
    if len(alternatives) != n:
        raise InvalidInputError("one alternative id per matrix row is required")
    phi_plus = pref.sum(axis=1) / (n - 1)
    phi_minus = pref.sum(axis=0) / (n - 1)
    return FlowResult.from_arrays(alternatives, phi_plus, phi_minus)


@dataclass(frozen=True)
class RankingEntry:
    """One row of a net-flow total order."""

    alternative: str
    phi_net: float
    rank: int
    tied: bool


def promethee_ii_ranking(result: FlowResult) -> list[RankingEntry]:
    """Total order by net flow, descending.

    Exact float ties are broken by alternative id (ascending) and every member
    of a tie group carries ``tied=True``.
    """
    net = result.phi_net
    order = sorted(range(len(net)), key=lambda i: (-net[i], result.alternatives[i]))
    counts: dict[float, int] = {}
    for value in net:
        counts[float(value)] = counts.get(float(value), 0) + 1
    return [
        RankingEntry(result.alternatives[i], float(net[i]), pos + 1,
                     counts[float(net[i])] > 1)
        for pos, i in enumerate(order)
    ]


def tie_groups(entries: Sequence[RankingEntry]) -> list[list[str]]:
    """Groups of alternatives sharing exactly equal net flows (size >= 2)."""
    groups: list[list[str]] = []
    current: list[str] = []
    current_value: float | None = None
    for entry in entries:
        if current and entry.phi_net == current_value:
            current.append(entry.alternative)
        else:
            if len(current) > 1:
                groups.append(current)
            current = [entry.alternative]
            current_value = entry.phi_net
    if len(current) > 1:
        groups.append(current)
    return groups
