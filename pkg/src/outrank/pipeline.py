"""End-to-end ranking runs: filter, tune, weigh, rank, and shape responses."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence

from .boxscore import (ALL_CRITERIA, DEFAULT_RESIDUAL_WEIGHT, RANKING_CRITERIA,
                       BoxScoreLine, Position, Scenario, compute_indices,
                       eligibility_filter, group_by_position, scenario_weights)
from .exceptions import DegenerateDataError, InvalidInputError, RequestError
from .flows import (FlowResult, RankingEntry, flows, preference_index_matrix,
                    promethee_ii_ranking)
from .outranking import OutrankingRelation, promethee_i_relation, with_reduced_edges
from .performance import CriterionSpec, Direction, PerformanceMatrix
from .preferences import PreferenceFunctionSpec, PreferenceKind, Thresholds
from .stats import anova_oneway, correlation_significant, pearson_correlation
from .tuning import TuningConfig, tune_all

SCHEMA_VERSION = 1

PROFILES = ("all",) + tuple(position.value for position in Position)

_EQUAL_ALIASES = {"equal", "1", 1}
_BOOSTED_ALIASES = {"correlation_boosted", "correlation", "2", 2}

_CRITERION_DESCRIPTIONS = {
    "PtsM": "points per minute played",
    "DRM": "defensive rebounds, steals and blocks net of fouls, per minute",
    "ORM": "offensive production net of misses, turnovers and blocks received, per minute",
    "EPts": "points scored per 100 attempted shot points",
    "ASTM": "assists plus steals per turnover, per minute",
    "PCSpct": "successfully completed possessions per 100 completed possessions",
    "PMW": "plus/minus weighted by the share of game minutes",
}


@dataclass(frozen=True)
class RankRequest:
    """Settings for one ranking run.

    ``scenario`` is ``"equal"``, ``"correlation_boosted"`` or an explicit map
    from criterion id to a nonnegative weight (missing criteria get weight 0).
    """

    profile: str = "all"
    scenario: str | int | Mapping[str, float] = "equal"
    alpha: float = 25.0
    beta: float = 75.0
    function_kind: str = "v_shape_indifference"
    scenario2_residual: float = DEFAULT_RESIDUAL_WEIGHT


def validate_request(request: RankRequest) -> None:
    """Raise ``RequestError`` with a stable code for any invalid setting."""
    if request.profile not in PROFILES:
        raise RequestError("unknown_profile",
                           f"profile must be one of {', '.join(PROFILES)}, "
                           f"got {request.profile!r}")
    for name, value in (("alpha", request.alpha), ("beta", request.beta)):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise RequestError("invalid_quantiles", f"{name} must be a number")
        if not math.isfinite(value) or not 0.0 <= value <= 100.0:
            raise RequestError("invalid_quantiles",
                               f"{name} must lie in [0, 100], got {value}")
    if request.alpha > request.beta:
        raise RequestError("invalid_quantiles",
                           f"alpha must not exceed beta, got alpha={request.alpha}, "
                           f"beta={request.beta}")
    try:
        PreferenceKind(request.function_kind)
    except ValueError:
        valid = ", ".join(kind.value for kind in PreferenceKind)
        raise RequestError("unknown_function_kind",
                           f"function_kind must be one of {valid}, "
                           f"got {request.function_kind!r}") from None
    scenario = request.scenario
    if isinstance(scenario, Mapping):
        unknown = sorted(set(scenario) - set(RANKING_CRITERIA))
        if unknown:
            raise RequestError("invalid_weights",
                               f"unknown criteria in weight map: {', '.join(unknown)}")
        total = 0.0
        for criterion, weight in scenario.items():
            if isinstance(weight, bool) or not isinstance(weight, (int, float)) \
                    or not math.isfinite(weight) or weight < 0:
                raise RequestError("invalid_weights",
                                   f"weight for {criterion} must be a nonnegative number")
            total += weight
        if total <= 0:
            raise RequestError("invalid_weights", "weights must have a positive sum")
    elif scenario not in _EQUAL_ALIASES | _BOOSTED_ALIASES:
        raise RequestError("invalid_scenario",
                           f"scenario must be 'equal', 'correlation_boosted' or a "
                           f"weight map, got {scenario!r}")
    residual = request.scenario2_residual
    if isinstance(residual, bool) or not isinstance(residual, (int, float)) \
            or not math.isfinite(residual) or residual < 0:
        raise RequestError("invalid_scenario", "scenario2_residual must be >= 0")


def _normalized_weight_map(weights: Mapping[str, float]) -> dict[str, float]:
    total = sum(weights.values())
    if abs(total - 1.0) <= 1e-9:
        return {criterion: float(weights[criterion]) for criterion in RANKING_CRITERIA}
    warnings.warn(f"weights sum to {total:.6g}; rescaling to 1", stacklevel=3)
    return {criterion: float(weights[criterion]) / total for criterion in RANKING_CRITERIA}


def resolve_weights(request: RankRequest) -> tuple[str, dict[str, float]]:
    """Turn the request's scenario into a normalised weight map plus a label."""
    scenario = request.scenario
    if isinstance(scenario, Mapping):
        filled = {criterion: float(scenario.get(criterion, 0.0))
                  for criterion in RANKING_CRITERIA}
        return "explicit", _normalized_weight_map(filled)
    if scenario in _EQUAL_ALIASES:
        return "equal", scenario_weights(Position.POINT_GUARD, Scenario.EQUAL)
    if request.profile == "all":
        warnings.warn("correlation-boosted weights need a position profile; "
                      "using equal weights", stacklevel=2)
        return "correlation_boosted", scenario_weights(Position.POINT_GUARD, Scenario.EQUAL)
    weights = scenario_weights(Position(request.profile), Scenario.CORRELATION_BOOSTED,
                               request.scenario2_residual)
    return "correlation_boosted", _normalized_weight_map(weights)


def performance_from_lines(lines: Sequence[BoxScoreLine]) -> PerformanceMatrix:
    """Ranking-criteria matrix for already filtered players."""
    vectors = [compute_indices(line) for line in lines]
    return PerformanceMatrix(
        tuple(line.player_id for line in lines),
        RANKING_CRITERIA,
        [[getattr(vector, criterion) for criterion in RANKING_CRITERIA]
         for vector in vectors])


def select_players(lines: Sequence[BoxScoreLine], profile: str) -> list[BoxScoreLine]:
    """Eligible players restricted to one position ('all' keeps every position)."""
    eligible = eligibility_filter(lines)
    if profile == "all":
        return eligible
    position = Position(profile)
    return [line for line in eligible if line.position is position]


@dataclass(frozen=True)
class RankResponse:
    """Everything one ranking run produces."""

    profile: str
    scenario: str
    alpha: float
    beta: float
    function_kind: str
    weights: dict[str, float]
    thresholds: dict[str, Thresholds]
    flow_result: FlowResult
    ranking: tuple[RankingEntry, ...]
    relation: OutrankingRelation

    def to_jsonable(self) -> dict:
        """Response dictionary with a stable key order for serialisation."""
        flows_payload = [
            {"player": alt,
             "phi_plus": float(self.flow_result.phi_plus[i]),
             "phi_minus": float(self.flow_result.phi_minus[i]),
             "phi_net": float(self.flow_result.phi_net[i])}
            for i, alt in enumerate(self.flow_result.alternatives)
        ]
        total_order = [
            {"rank": entry.rank, "player": entry.alternative,
             "phi_net": entry.phi_net, "tied": entry.tied}
            for entry in self.ranking
        ]
        partial_order = {
            "edges": [[winner, loser] for winner, loser in self.relation.edges],
            "indifferent_pairs": [[a, b] for a, b in self.relation.indifferent_pairs()],
            "incomparable_pairs": len(self.relation.incomparable_pairs()),
        }
        return {
            "schema_version": SCHEMA_VERSION,
            "profile": self.profile,
            "scenario": self.scenario,
            "alpha": float(self.alpha),
            "beta": float(self.beta),
            "function_kind": self.function_kind,
            "weights": {c: self.weights[c] for c in RANKING_CRITERIA},
            "thresholds": {c: {"q": self.thresholds[c].q, "p": self.thresholds[c].p}
                           for c in RANKING_CRITERIA},
            "flows": flows_payload,
            "total_order": total_order,
            "partial_order": partial_order,
        }


def run_rank(lines: Sequence[BoxScoreLine], request: RankRequest,
             *, directions: Mapping[str, Direction | str] | None = None) -> RankResponse:
    """Filter, tune, weigh and rank one dataset; deterministic for fixed inputs.

    ``directions`` optionally flips criteria to minimise (config-file driven);
    every ranking criterion defaults to maximise.
    """
    validate_request(request)
    selected = select_players(lines, request.profile)
    if len(selected) < 2:
        raise RequestError("too_few_players",
                           f"ranking needs at least 2 eligible players in profile "
                           f"{request.profile!r}, found {len(selected)}")
    perf = performance_from_lines(selected)
    thresholds = tune_all(perf, TuningConfig(float(request.alpha), float(request.beta)))
    label, weight_map = resolve_weights(request)
    kind = PreferenceKind(request.function_kind)
    direction_of = {}
    for criterion in RANKING_CRITERIA:
        raw = (directions or {}).get(criterion, Direction.MAXIMIZE)
        direction_of[criterion] = raw if isinstance(raw, Direction) else Direction(raw)
    specs = [
        CriterionSpec(criterion, direction_of[criterion], weight_map[criterion],
                      PreferenceFunctionSpec(kind, thresholds[criterion]))
        for criterion in RANKING_CRITERIA
    ]
    pref = preference_index_matrix(perf, specs)
    flow_result = flows(pref, perf.alternatives)
    ranking = promethee_ii_ranking(flow_result)
    relation = with_reduced_edges(promethee_i_relation(flow_result))
    return RankResponse(
        profile=request.profile, scenario=label,
        alpha=float(request.alpha), beta=float(request.beta),
        function_kind=kind.value, weights=weight_map, thresholds=thresholds,
        flow_result=flow_result, ranking=tuple(ranking), relation=relation)


# ---------------------------------------------------------------------------
# Payloads shared by the CLI and the HTTP API
# ---------------------------------------------------------------------------

def player_indices_payload(lines: Sequence[BoxScoreLine]) -> dict:
    """Ids, positions and raw index values, in input order."""
    players = []
    for line in lines:
        vector = compute_indices(line)
        players.append({
            "player_id": line.player_id,
            "position": line.position.value,
            "indices": {criterion: getattr(vector, criterion)
                        for criterion in ALL_CRITERIA},
        })
    return {"schema_version": SCHEMA_VERSION, "players": players}


def criteria_payload() -> dict:
    """Metadata for every criterion, ranking and auxiliary."""
    return {
        "schema_version": SCHEMA_VERSION,
        "criteria": [
            {"id": criterion,
             "direction": "max",
             "ranking": criterion in RANKING_CRITERIA,
             "description": _CRITERION_DESCRIPTIONS[criterion]}
            for criterion in ALL_CRITERIA
        ],
    }


def thresholds_payload(lines: Sequence[BoxScoreLine], profile: str,
                       alpha: float, beta: float) -> dict:
    """Tuned thresholds per criterion for one profile."""
    selected = select_players(lines, profile)
    if len(selected) < 2:
        raise RequestError("too_few_players",
                           f"tuning needs at least 2 eligible players in profile "
                           f"{profile!r}, found {len(selected)}")
    perf = performance_from_lines(selected)
    tuned = tune_all(perf, TuningConfig(alpha, beta))
    return {
        "schema_version": SCHEMA_VERSION,
        "profile": profile,
        "alpha": float(alpha),
        "beta": float(beta),
        "thresholds": {c: {"q": tuned[c].q, "p": tuned[c].p} for c in RANKING_CRITERIA},
    }


def _position_groups(lines: Sequence[BoxScoreLine]):
    eligible = eligibility_filter(lines)
    vectors = {line.player_id: compute_indices(line) for line in eligible}
    grouped = group_by_position(eligible)
    return eligible, vectors, grouped


def anova_payload(lines: Sequence[BoxScoreLine]) -> dict:
    """Per-criterion position means and the one-way ANOVA p-value."""
    eligible, vectors, grouped = _position_groups(lines)
    rows = []
    for criterion in ALL_CRITERIA:
        group_values = []
        means = {}
        for position in Position:
            values = [getattr(vectors[line.player_id], criterion)
                      for line in grouped[position]]
            if values:
                group_values.append(values)
                means[position.value] = sum(values) / len(values)
        total_values = [getattr(vectors[line.player_id], criterion)
                        for line in eligible]
        row = {
            "criterion": criterion,
            "total_mean": sum(total_values) / len(total_values) if total_values else 0.0,
            "group_means": means,
        }
        try:
            result = anova_oneway(group_values)
            row["f_stat"] = result.f_stat
            row["df"] = [result.df_between, result.df_within]
            row["p_value"] = result.p_value
        except (DegenerateDataError, InvalidInputError):
            row["f_stat"] = None
            row["df"] = None
            row["p_value"] = None
        rows.append(row)
    return {"schema_version": SCHEMA_VERSION, "anova": rows}


def correlation_payload(lines: Sequence[BoxScoreLine]) -> dict:
    """Correlation matrix of all criteria per position, with significance flags."""
    _, vectors, grouped = _position_groups(lines)
    tables = []
    for position in Position:
        members = grouped[position]
        if len(members) < 3:
            continue
        columns = {criterion: [getattr(vectors[line.player_id], criterion)
                               for line in members]
                   for criterion in ALL_CRITERIA}
        n = len(members)
        matrix = []
        significant = []
        for a in ALL_CRITERIA:
            row_r = []
            row_s = []
            for b in ALL_CRITERIA:
                try:
                    r = pearson_correlation(columns[a], columns[b])
                    row_r.append(r)
                    row_s.append(bool(correlation_significant(r, n)) if a != b else False)
                except DegenerateDataError:
                    row_r.append(None)
                    row_s.append(False)
            matrix.append(row_r)
            significant.append(row_s)
        tables.append({
            "position": position.value,
            "n": n,
            "criteria": list(ALL_CRITERIA),
            "r": matrix,
            "significant": significant,
        })
    return {"schema_version": SCHEMA_VERSION, "correlations": tables}
