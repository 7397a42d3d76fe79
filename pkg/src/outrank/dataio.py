"""CSV ingestion and writing for box-score datasets."""

from __future__ import annotations

import csv
import io
from typing import Iterable

from .boxscore import BoxScoreLine, Position
from .exceptions import (DuplicatePlayerError, InvalidInputError, RowValueError,
                         SchemaError)

CSV_COLUMNS: tuple[str, ...] = (
    "player_id", "position", "games", "Min", "Pts", "P2", "P2A", "P3", "P3A",
    "FT", "FTA", "FG", "FGA", "ORB", "DRB", "AST", "STL", "BLK", "BLKR",
    "TOV", "PF", "PFR", "PM",
)
_FLOAT_COLUMNS = CSV_COLUMNS[3:]


def parse_boxscore_csv(data: bytes | str) -> list[BoxScoreLine]:
    """Parse a comma-separated dataset with one row per player.

    The header may order columns freely but must contain every schema column;
    unknown extra columns are ignored. The first malformed cell or violated
    field invariant aborts parsing with its row (and column, when known).
    """
    text = data.decode("utf-8") if isinstance(data, (bytes, bytearray)) else data
    reader = csv.reader(io.StringIO(text))
    try:
        header = [cell.strip() for cell in next(reader)]
    except StopIteration:
        raise SchemaError("empty input: missing header row") from None
    missing = [column for column in CSV_COLUMNS if column not in header]
    if missing:
        raise SchemaError(f"missing required column(s): {', '.join(missing)}")
    column_index = {column: header.index(column) for column in CSV_COLUMNS}

    lines: list[BoxScoreLine] = []
    seen: set[str] = set()
    for row_number, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) < len(header):
            raise RowValueError(f"expected {len(header)} cells, found {len(row)}",
                                row=row_number)

        def cell(column: str) -> str:
            return row[column_index[column]].strip()

        player_id = cell("player_id")
        if not player_id:
            raise RowValueError("player_id must be nonempty",
                                row=row_number, column="player_id")
        if player_id in seen:
            raise DuplicatePlayerError(
                f"duplicate player_id {player_id!r} at row {row_number}")
        seen.add(player_id)

        raw_position = cell("position")
        try:
            position = Position(raw_position)
        except ValueError:
            raise RowValueError(f"unknown position code {raw_position!r}",
                                row=row_number, column="position") from None

        raw_games = cell("games")
        try:
            games = int(raw_games)
        except ValueError:
            raise RowValueError(f"expected an integer, got {raw_games!r}",
                                row=row_number, column="games") from None

        numbers: dict[str, float] = {}
        for column in _FLOAT_COLUMNS:
            raw = cell(column)
            try:
                numbers[column] = float(raw)
            except ValueError:
                raise RowValueError(f"expected a number, got {raw!r}",
                                    row=row_number, column=column) from None

        try:
            line = BoxScoreLine(player_id=player_id, position=position,
                                games=games, **numbers)
        except InvalidInputError as exc:
            raise RowValueError(str(exc), row=row_number) from None
        lines.append(line)
    return lines


def _format_number(value: float) -> str:
    # Shortest decimal that round-trips to the same float.
    return repr(float(value))


def write_boxscore_csv(lines: Iterable[BoxScoreLine]) -> str:
    """Serialise lines in canonical column order.

    Floats use the shortest round-trip decimal form, so parse -> write -> parse
    is a fixed point.
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for line in lines:
        writer.writerow(
            [line.player_id, line.position.value, str(line.games)]
            + [_format_number(getattr(line, column)) for column in _FLOAT_COLUMNS])
    return out.getvalue()
