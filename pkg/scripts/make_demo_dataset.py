#!/usr/bin/env python3
"""Regenerate the synthetic demo season at data/demo_players.csv.

Deterministic (fixed seed). Positions get different statistical tendencies so
position splits, correlation tables and the outranking graphs all have some
structure to show. Point totals are consistent with makes (Pts = 2*P2 + 3*P3
+ FT) and field-goal totals with their components.
"""

import csv
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parents[1]

COLUMNS = ["player_id", "position", "games", "Min", "Pts", "P2", "P2A", "P3",
           "P3A", "FT", "FTA", "FG", "FGA", "ORB", "DRB", "AST", "STL", "BLK",
           "BLKR", "TOV", "PF", "PFR", "PM"]

# Per-minute attempt/event rates by position: (p2a, p3a, fta, orb, drb, ast,
# stl, blk, blkr, tov, pf, pfr).
TENDENCIES = {
    "PG": (0.18, 0.16, 0.10, 0.03, 0.10, 0.22, 0.06, 0.01, 0.03, 0.10, 0.08, 0.10),
    "SG": (0.22, 0.18, 0.10, 0.04, 0.11, 0.12, 0.05, 0.01, 0.03, 0.08, 0.09, 0.09),
    "F":  (0.26, 0.12, 0.11, 0.07, 0.15, 0.08, 0.04, 0.02, 0.03, 0.07, 0.10, 0.09),
    "PF": (0.30, 0.06, 0.12, 0.10, 0.19, 0.06, 0.03, 0.04, 0.04, 0.07, 0.11, 0.10),
    "C":  (0.32, 0.02, 0.14, 0.12, 0.22, 0.05, 0.03, 0.06, 0.04, 0.07, 0.12, 0.12),
}

NAMES = ["adler", "bruno", "carter", "devine", "elgin", "foster", "grant",
         "hayes", "ibaka", "jansen"]


def make_player(rng, position, index):
    games = int(rng.integers(12, 31))
    avg_minutes = float(rng.uniform(12, 30))
    minutes = round(games * avg_minutes, 1)
    p2a_r, p3a_r, fta_r, orb_r, drb_r, ast_r, stl_r, blk_r, blkr_r, tov_r, \
        pf_r, pfr_r = TENDENCIES[position]

    def count(rate, spread=0.25):
        return int(max(0, rng.normal(rate, rate * spread) * minutes))

    p2a = count(p2a_r)
    p3a = count(p3a_r)
    fta = count(fta_r)
    p2 = int(p2a * rng.uniform(0.40, 0.58))
    p3 = int(p3a * rng.uniform(0.28, 0.42))
    ft = int(fta * rng.uniform(0.65, 0.90))
    row = {
        "player_id": f"{NAMES[index]}_{position.lower()}",
        "position": position,
        "games": games,
        "Min": minutes,
        "Pts": 2 * p2 + 3 * p3 + ft,
        "P2": p2, "P2A": p2a, "P3": p3, "P3A": p3a, "FT": ft, "FTA": fta,
        "FG": p2 + p3, "FGA": p2a + p3a,
        "ORB": count(orb_r), "DRB": count(drb_r), "AST": count(ast_r),
        "STL": count(stl_r), "BLK": count(blk_r), "BLKR": count(blkr_r),
        "TOV": max(1, count(tov_r)), "PF": count(pf_r), "PFR": count(pfr_r),
        "PM": int(rng.normal(0, 60)),
    }
    return row


def main():
    rng = np.random.default_rng(20150614)
    rows = []
    for position in TENDENCIES:
        for index in range(9):
            rows.append(make_player(rng, position, index))
    # A couple of short-season players the eligibility filter should drop.
    bench = make_player(rng, "SG", 9)
    bench.update(player_id="bench_sg", games=6)
    rows.append(bench)
    cameo = make_player(rng, "C", 9)
    cameo.update(player_id="cameo_c", games=20, Min=150.0)
    rows.append(cameo)

    target = ROOT / "data" / "demo_players.csv"
    target.parent.mkdir(exist_ok=True)
    with open(target, "w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {target} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
