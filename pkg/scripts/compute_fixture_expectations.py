#!/usr/bin/env python3
"""Recompute the frozen expectations for the end-to-end fixture dataset.

Deliberately independent of the installed package: CSV reading, index
formulas, threshold tuning and flows are all restated here (plus the shared
reference code in tests/oracles.py). Output goes to
tests/data/expected_fixture.json with full-precision floats.

Run from the repository root:  python scripts/compute_fixture_expectations.py
"""

import csv
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from oracles import brute_force_flows, pairwise_abs_diffs, reference_quantile  # noqa: E402

CRITERIA = ["PtsM", "DRM", "ORM", "EPts", "ASTM", "PCSpct"]

REQUESTS = {
    # Default engine settings: ramp preference function on tuned thresholds.
    "request_a": {
        "function_kind": "v_shape_indifference",
        "weights": {c: 1.0 / 6.0 for c in CRITERIA},
        "alpha": 25.0,
        "beta": 75.0,
    },
    # Step preference function with dyadic weights: every flow is an exact
    # binary fraction, so serialised output can be compared digit for digit.
    "request_b": {
        "function_kind": "usual",
        "weights": {"PtsM": 0.25, "DRM": 0.25, "ORM": 0.125,
                    "EPts": 0.125, "ASTM": 0.125, "PCSpct": 0.125},
        "alpha": 25.0,
        "beta": 75.0,
    },
}


def read_rows(path):
    with open(path, newline="", encoding="utf-8") as handle:
        return [dict(row) for row in csv.DictReader(handle)]


def eligible(row):
    games = int(row["games"])
    return games >= 10 and float(row["Min"]) / games >= 10.0


def indices(row):
    g = lambda name: float(row[name])  # noqa: E731
    minutes = g("Min")
    pts_m = g("Pts") / minutes
    drm = (g("DRB") + g("STL") + g("BLK") - g("PF")) / minutes
    orm = (2 * g("P2") + 3 * g("P3") + g("FT") + g("ORB") + g("AST") + g("PFR")
           - ((g("FGA") - g("FG")) + (g("FTA") - g("FT")) + g("TOV") + g("BLKR"))) / minutes
    shot_pts = 2 * g("P2A") + 3 * g("P3A") + g("FTA")
    epts = 100.0 * g("Pts") / shot_pts if shot_pts > 0 else 0.0
    astm = (g("AST") + g("STL")) / (max(g("TOV"), 1.0) * minutes)
    poss = g("FGA") + g("PFR") + g("AST") + g("TOV")
    pcs = 100.0 * (g("FG") + g("PFR") + g("AST")) / poss if poss > 0 else 0.0
    pmw = g("PM") * minutes / 40.0
    return {"PtsM": pts_m, "DRM": drm, "ORM": orm, "EPts": epts,
            "ASTM": astm, "PCSpct": pcs, "PMW": pmw}


def main():
    rows = [r for r in read_rows(ROOT / "tests" / "data" / "fixture_players.csv")
            if eligible(r)]
    players = [r["player_id"] for r in rows]
    vectors = [indices(r) for r in rows]
    table = [[vec[c] for c in CRITERIA] for vec in vectors]

    out = {
        "players": players,
        "indices": {player: vec for player, vec in zip(players, vectors)},
    }

    for name, req in REQUESTS.items():
        thresholds = {}
        triples = []
        for k, criterion in enumerate(CRITERIA):
            diffs = pairwise_abs_diffs([row[k] for row in table])
            q = reference_quantile(diffs, req["alpha"])
            p = reference_quantile(diffs, req["beta"])
            thresholds[criterion] = [q, p]
            triples.append((q, p, (q + p) / 2.0 or 1.0))
        weights = [req["weights"][c] for c in CRITERIA]
        kinds = [req["function_kind"]] * len(CRITERIA)
        directions = ["max"] * len(CRITERIA)
        _, plus, minus = brute_force_flows(table, directions, weights, kinds, triples)
        net = [a - b for a, b in zip(plus, minus)]
        order = sorted(range(len(players)), key=lambda i: (-net[i], players[i]))
        out[name] = {
            "function_kind": req["function_kind"],
            "weights": req["weights"],
            "alpha": req["alpha"],
            "beta": req["beta"],
            "thresholds": thresholds,
            "phi_plus": {players[i]: plus[i] for i in range(len(players))},
            "phi_minus": {players[i]: minus[i] for i in range(len(players))},
            "phi_net": {players[i]: net[i] for i in range(len(players))},
            "order": [players[i] for i in order],
        }

    target = ROOT / "tests" / "data" / "expected_fixture.json"
    target.write_text(json.dumps(out, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
