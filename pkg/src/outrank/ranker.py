"""scikit-learn style front end for the ranking pipeline."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array

from .exceptions import InvalidInputError
from .flows import flows, preference_index_matrix, promethee_ii_ranking
from .performance import CriterionSpec, Direction, PerformanceMatrix
from .preferences import PreferenceFunctionSpec, PreferenceKind
from .tuning import TuningConfig, tune_all


class PrometheeRanker(BaseEstimator):
    """Rank the rows of a criteria matrix by outranking flows.

    The ranking is transductive: the flow of a row depends on every other row,
    so there is no out-of-sample ``transform``; use ``fit_transform`` /
    ``fit_predict`` on the full matrix instead (as with manifold learners).

    Parameters
    ----------
    weights : array-like of shape (n_features,), default=None
        Importance of each criterion column. Equal weights when None.
        Values must be nonnegative and are rescaled to sum to one.
    directions : sequence of {"max", "min"}, default=None
        Whether each column is maximised or minimised; all "max" when None.
    function_kind : str, default="v_shape_indifference"
        One of "usual", "u_shape", "v_shape", "level", "v_shape_indifference",
        "gaussian".
    alpha, beta : float, default=(25.0, 75.0)
        Quantile levels (percent) used to tune the indifference and preference
        thresholds per column from the data.

    Attributes
    ----------
    positive_flow_, negative_flow_, net_flow_ : ndarray of shape (n_samples,)
        The flow triple of each fitted row.
    ranks_ : ndarray of shape (n_samples,)
        1-based rank of each row (1 = best net flow; exact ties keep row order).
    ranking_ : ndarray of shape (n_samples,)
        Row indices sorted best first.
    thresholds_ : dict
        Tuned (q, p) per criterion id.
    """

    def __init__(self, weights=None, directions=None,
                 function_kind="v_shape_indifference", alpha=25.0, beta=75.0):
        self.weights = weights
        self.directions = directions
        self.function_kind = function_kind
        self.alpha = alpha
        self.beta = beta

    def fit(self, X, y=None):
        """Compute flows and ranks for every row of X."""
        feature_names = getattr(X, "columns", None)
        X = check_array(X, dtype=np.float64, ensure_min_samples=2, ensure_min_features=1)
        n_samples, n_features = X.shape

        if feature_names is not None:
            criteria = tuple(str(name) for name in feature_names)
        else:
            criteria = tuple(f"c{k}" for k in range(n_features))
        # Zero-padded ids make the lexicographic tiebreak match row order.
        width = len(str(n_samples - 1))
        row_ids = tuple(f"r{i:0{width}d}" for i in range(n_samples))

        if self.weights is None:
            weight_values = np.full(n_features, 1.0 / n_features)
        else:
            weight_values = np.asarray(self.weights, dtype=np.float64)
            if weight_values.shape != (n_features,):
                raise InvalidInputError(
                    f"weights must have length {n_features}, got shape "
                    f"{weight_values.shape}")
            if not np.all(np.isfinite(weight_values)) or np.any(weight_values < 0):
                raise InvalidInputError("weights must be finite and nonnegative")
            total = weight_values.sum()
            if total <= 0:
                raise InvalidInputError("weights must have a positive sum")
            weight_values = weight_values / total

        if self.directions is None:
            direction_values = [Direction.MAXIMIZE] * n_features
        else:
            if len(self.directions) != n_features:
                raise InvalidInputError(
                    f"directions must have length {n_features}")
            direction_values = [d if isinstance(d, Direction) else Direction(d)
                                for d in self.directions]

        try:
            kind = PreferenceKind(self.function_kind)
        except ValueError:
            valid = ", ".join(k.value for k in PreferenceKind)
            raise InvalidInputError(
                f"function_kind must be one of {valid}, got "
                f"{self.function_kind!r}") from None

        perf = PerformanceMatrix(row_ids, criteria, X)
        tuned = tune_all(perf, TuningConfig(float(self.alpha), float(self.beta)))
        specs = [
            CriterionSpec(criterion, direction_values[k], float(weight_values[k]),
                          PreferenceFunctionSpec(kind, tuned[criterion]))
            for k, criterion in enumerate(criteria)
        ]
        flow_result = flows(preference_index_matrix(perf, specs), row_ids)
        entries = promethee_ii_ranking(flow_result)

        self.n_features_in_ = n_features
        if feature_names is not None:
            self.feature_names_in_ = np.asarray(list(feature_names), dtype=object)
        self.criteria_ = criteria
        self.thresholds_ = {c: (tuned[c].q, tuned[c].p) for c in criteria}
        self.positive_flow_ = np.array(flow_result.phi_plus)
        self.negative_flow_ = np.array(flow_result.phi_minus)
        self.net_flow_ = np.array(flow_result.phi_net)
        order = np.array([row_ids.index(entry.alternative) for entry in entries])
        self.ranking_ = order
        ranks = np.empty(n_samples, dtype=np.int64)
        ranks[order] = np.arange(1, n_samples + 1)
        self.ranks_ = ranks
        return self

    def fit_transform(self, X, y=None):
        """Fit and return the per-row flow triple (phi+, phi-, phi net)."""
        self.fit(X)
        return np.column_stack([self.positive_flow_, self.negative_flow_,
                                self.net_flow_])

    def fit_predict(self, X, y=None):
        """Fit and return the 1-based rank of each row (1 = best)."""
        self.fit(X)
        return self.ranks_.copy()
