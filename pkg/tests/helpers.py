"""Shared generators for randomised tests."""

import numpy as np

from outrank import (CriterionSpec, Direction, PerformanceMatrix,
                     PreferenceFunctionSpec, PreferenceKind, Thresholds,
                     TuningConfig, tune_thresholds)

KIND_NAMES = [kind.value for kind in PreferenceKind]


def random_instance(rng, n_low=2, n_high=6, m_low=1, m_high=3):
    """A random performance matrix plus matching criterion specs.

    Thresholds are tuned from the data at random quantile levels; the raw
    numbers are also returned so oracle code can reuse them verbatim.
    """
    n = int(rng.integers(n_low, n_high + 1))
    m = int(rng.integers(m_low, m_high + 1))
    values = rng.uniform(-10.0, 10.0, size=(n, m))
    kinds = [KIND_NAMES[int(i)] for i in rng.integers(0, len(KIND_NAMES), size=m)]
    directions = ["max" if rng.random() < 0.7 else "min" for _ in range(m)]
    weights = rng.dirichlet(np.ones(m))
    alpha = float(rng.uniform(0.0, 60.0))
    beta = float(rng.uniform(alpha, 100.0))

    triples = []
    specs = []
    for k in range(m):
        tuned = tune_thresholds(values[:, k], TuningConfig(alpha, beta))
        sigma = tuned.sigma if tuned.sigma is not None else 1.0
        triples.append((tuned.q, tuned.p, sigma))
        specs.append(CriterionSpec(
            f"c{k}", Direction(directions[k]), float(weights[k]),
            PreferenceFunctionSpec(PreferenceKind(kinds[k]),
                                   Thresholds(tuned.q, tuned.p, sigma))))

    perf = PerformanceMatrix(tuple(f"a{i}" for i in range(n)),
                             tuple(f"c{k}" for k in range(m)), values)
    raw = {"values": values.tolist(), "kinds": kinds, "directions": directions,
           "weights": [float(w) for w in weights], "triples": triples}
    return perf, specs, raw


def random_preference_matrix(rng, n):
    """Square [0, 1] matrix with zero diagonal."""
    pref = rng.uniform(0.0, 1.0, size=(n, n))
    np.fill_diagonal(pref, 0.0)
    return pref


def random_dag(rng, n_max=8, density=0.35):
    """Random DAG; edges only point from lower to higher node index."""
    n = int(rng.integers(1, n_max + 1))
    nodes = [f"n{i}" for i in range(n)]
    edges = [(nodes[i], nodes[j])
             for i in range(n) for j in range(i + 1, n)
             if rng.random() < density]
    return nodes, edges
