"""Outranking-flow rankings with quantile-tuned preference thresholds.

The functional core lives in the submodules (``preferences``, ``performance``,
``flows``, ``tuning``, ``outranking``, ``boxscore``, ``stats``); ``pipeline``
wires them into end-to-end ranking runs, ``ranker`` exposes a scikit-learn
style estimator, and ``service``/``cli`` provide the HTTP and command-line
surfaces.
"""

from .boxscore import (ALL_CRITERIA, RANKING_CRITERIA, BoxScoreLine,
                       CriterionVector, Position, Scenario, compute_indices,
                       eligibility_filter, group_by_position, scenario_weights)
from .dataio import CSV_COLUMNS, parse_boxscore_csv, write_boxscore_csv
from .exceptions import (ConfigurationError, DegenerateDataError,
                         DuplicatePlayerError, InvalidInputError, NotFoundError,
                         OutrankError, RequestError, RowValueError, SchemaError)
from .flows import (FlowResult, RankingEntry, difference_matrix, flows,
                    preference_index_matrix, promethee_ii_ranking, tie_groups)
from .outranking import (OutrankingRelation, Verdict, build_digraph,
                         longest_path_depths, promethee_i_relation, to_dot,
                         transitive_reduction, with_reduced_edges)
from .performance import (CriterionSpec, Direction, PerformanceMatrix,
                          normalized_weights)
from .pipeline import (RankRequest, RankResponse, run_rank, select_players,
                       validate_request)
from .preferences import (PreferenceFunctionSpec, PreferenceKind, Thresholds,
                          preference_degree, preference_degrees)
from .ranker import PrometheeRanker
from .stats import (AnovaResult, anova_oneway, correlation_p_value,
                    correlation_significant, pearson_correlation,
                    regularized_incomplete_beta, student_t_two_sided_p)
from .tuning import (TuningConfig, pairwise_absolute_differences, quantile,
                     tune_all, tune_thresholds)

__version__ = "0.1.0"

__all__ = [
    "ALL_CRITERIA", "RANKING_CRITERIA", "BoxScoreLine", "CriterionVector",
    "Position", "Scenario", "compute_indices", "eligibility_filter",
    "group_by_position", "scenario_weights",
    "CSV_COLUMNS", "parse_boxscore_csv", "write_boxscore_csv",
    "ConfigurationError", "DegenerateDataError", "DuplicatePlayerError",
    "InvalidInputError", "NotFoundError", "OutrankError", "RequestError",
    "RowValueError", "SchemaError",
    "FlowResult", "RankingEntry", "difference_matrix", "flows",
    "preference_index_matrix", "promethee_ii_ranking", "tie_groups",
    "OutrankingRelation", "Verdict", "build_digraph", "longest_path_depths",
    "promethee_i_relation", "to_dot", "transitive_reduction", "with_reduced_edges",
    "CriterionSpec", "Direction", "PerformanceMatrix", "normalized_weights",
    "RankRequest", "RankResponse", "run_rank", "select_players", "validate_request",
    "PreferenceFunctionSpec", "PreferenceKind", "Thresholds",
    "preference_degree", "preference_degrees",
    "PrometheeRanker",
    "AnovaResult", "anova_oneway", "correlation_p_value", "correlation_significant",
    "pearson_correlation", "regularized_incomplete_beta", "student_t_two_sided_p",
    "TuningConfig", "pairwise_absolute_differences", "quantile", "tune_all",
    "tune_thresholds",
    "__version__",
]
