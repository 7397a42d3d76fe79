"""Box-score lines, per-player efficiency indices, eligibility and scenario weights."""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, fields as dataclass_fields
from typing import Iterable, Sequence

from .exceptions import InvalidInputError


class Position(enum.Enum):
    """Play positions, with the short codes used in datasets."""

    POINT_GUARD = "PG"
    SHOOTING_GUARD = "SG"
    FORWARD = "F"
    POWER_FORWARD = "PF"
    CENTER = "C"


EXTERIOR_POSITIONS = (Position.POINT_GUARD, Position.SHOOTING_GUARD)
INTERIOR_POSITIONS = (Position.POWER_FORWARD, Position.CENTER)

# The six indices players are ranked on; PMW is kept for weight derivation
# and comparisons but never enters a ranking.
RANKING_CRITERIA = ("PtsM", "DRM", "ORM", "EPts", "ASTM", "PCSpct")
ALL_CRITERIA = RANKING_CRITERIA + ("PMW",)

GAME_MINUTES = 40.0
MIN_GAMES = 10
MIN_AVG_MINUTES = 10.0

_MADE_ATTEMPTED = (("P2", "P2A"), ("P3", "P3A"), ("FT", "FTA"), ("FG", "FGA"))
_SUM_TOL = 1e-9


@dataclass(frozen=True)
class BoxScoreLine:
    """Season totals for one player.

    Counting stats are nonnegative; made shots cannot exceed attempts; field
    goals must equal the sum of 2- and 3-point makes (same for attempts).
    Plus/minus (PM) may be negative.
    """

    player_id: str
    position: Position
    games: int
    Min: float
    Pts: float
    P2: float
    P2A: float
    P3: float
    P3A: float
    FT: float
    FTA: float
    FG: float
    FGA: float
    ORB: float
    DRB: float
    AST: float
    STL: float
    BLK: float
    BLKR: float
    TOV: float
    PF: float
    PFR: float
    PM: float

    def __post_init__(self):
        if not self.player_id:
            raise InvalidInputError("player_id must be nonempty")
        if not isinstance(self.position, Position):
            object.__setattr__(self, "position", Position(self.position))
        games = int(self.games)
        if games != self.games or games < 0:
            raise InvalidInputError(f"games must be a nonnegative integer, got {self.games}")
        object.__setattr__(self, "games", games)
        for spec in dataclass_fields(self):
            if spec.name in ("player_id", "position", "games"):
                continue
            value = float(getattr(self, spec.name))
            if not math.isfinite(value):
                raise InvalidInputError(f"{spec.name} must be finite")
            if spec.name != "PM" and value < 0:
                raise InvalidInputError(f"{spec.name} must be >= 0, got {value}")
            object.__setattr__(self, spec.name, value)
        for made, attempted in _MADE_ATTEMPTED:
            if getattr(self, made) > getattr(self, attempted):
                raise InvalidInputError(
                    f"{made} cannot exceed {attempted} "
                    f"({getattr(self, made)} > {getattr(self, attempted)})")
        if abs(self.FG - (self.P2 + self.P3)) > _SUM_TOL:
            raise InvalidInputError("FG must equal P2 + P3")
        if abs(self.FGA - (self.P2A + self.P3A)) > _SUM_TOL:
            raise InvalidInputError("FGA must equal P2A + P3A")


@dataclass(frozen=True)
class CriterionVector:
    """The seven per-player efficiency indices."""

    PtsM: float
    DRM: float
    ORM: float
    EPts: float
    ASTM: float
    PCSpct: float
    PMW: float

    def as_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in ALL_CRITERIA}


def compute_indices(line: BoxScoreLine) -> CriterionVector:
    """Efficiency indices from season totals.

    PtsM, DRM, ORM and ASTM are per minute played; EPts and PCSpct are
    percentages; PMW weights plus/minus by the share of game minutes. Rate
    denominators that can legitimately be zero (no shot attempts, no completed
    possessions) yield the floor value 0 rather than an error, and the assist
    ratio treats a turnover count below one as one so it stays finite.
    """
    if line.Min <= 0:
        raise InvalidInputError("index computation requires Min > 0")
    minutes = line.Min
    pts_m = line.Pts / minutes
    drm = (line.DRB + line.STL + line.BLK - line.PF) / minutes
    orm = (2.0 * line.P2 + 3.0 * line.P3 + line.FT + line.ORB + line.AST + line.PFR
           - ((line.FGA - line.FG) + (line.FTA - line.FT) + line.TOV + line.BLKR)) / minutes
    shot_points = 2.0 * line.P2A + 3.0 * line.P3A + line.FTA
    epts = 100.0 * line.Pts / shot_points if shot_points > 0 else 0.0
    astm = (line.AST + line.STL) / (max(line.TOV, 1.0) * minutes)
    possessions = line.FGA + line.PFR + line.AST + line.TOV
    pcs = 100.0 * (line.FG + line.PFR + line.AST) / possessions if possessions > 0 else 0.0
    pmw = line.PM * minutes / GAME_MINUTES
    return CriterionVector(PtsM=pts_m, DRM=drm, ORM=orm, EPts=epts,
                           ASTM=astm, PCSpct=pcs, PMW=pmw)


def eligibility_filter(lines: Iterable[BoxScoreLine]) -> list[BoxScoreLine]:
    """Keep players with at least 10 games and a 10-minute average, both inclusive."""
    return [line for line in lines
            if line.games >= MIN_GAMES
            and line.Min / line.games >= MIN_AVG_MINUTES]


def group_by_position(lines: Iterable[BoxScoreLine]) -> dict[Position, list[BoxScoreLine]]:
    """Partition lines by position, preserving input order; all five keys present."""
    groups: dict[Position, list[BoxScoreLine]] = {position: [] for position in Position}
    for line in lines:
        groups[line.position].append(line)
    return groups


class Scenario(enum.Enum):
    """Preset weighting strategies."""

    EQUAL = "equal"
    CORRELATION_BOOSTED = "correlation_boosted"


BOOSTED_WEIGHT = 0.4
# Splits the leftover 0.2 across the four unboosted criteria.
DEFAULT_RESIDUAL_WEIGHT = 0.05


def scenario_weights(position: Position | str, scenario: Scenario,
                     residual_weight: float = DEFAULT_RESIDUAL_WEIGHT) -> dict[str, float]:
    """Weight map over the six ranking criteria for a position profile.

    The correlation-boosted scenario raises the two criteria that track
    plus/minus for the profile to 0.4 each: shot efficiency and assist ratio
    for exterior players (PG, SG), defensive rating and assist ratio for
    interior players (PF, C). Forwards have no boosted pair and fall back to
    equal weights with a warning. ``residual_weight`` is the share given to
    each unboosted criterion; the 0.05 default keeps the total at one.
    """
    if scenario is Scenario.EQUAL:
        return {criterion: 1.0 / 6.0 for criterion in RANKING_CRITERIA}
    position = position if isinstance(position, Position) else Position(position)
    if position in EXTERIOR_POSITIONS:
        boosted = ("EPts", "ASTM")
    elif position in INTERIOR_POSITIONS:
        boosted = ("DRM", "ASTM")
    else:
        warnings.warn("no boosted criteria are defined for forwards; using equal weights",
                      stacklevel=2)
        return {criterion: 1.0 / 6.0 for criterion in RANKING_CRITERIA}
    if not math.isfinite(residual_weight) or residual_weight < 0:
        raise InvalidInputError(
            f"residual weight must be finite and >= 0, got {residual_weight}")
    return {criterion: BOOSTED_WEIGHT if criterion in boosted else residual_weight
            for criterion in RANKING_CRITERIA}
