import pytest

from outrank import (DuplicatePlayerError, Position, RowValueError, SchemaError,
                     parse_boxscore_csv, write_boxscore_csv)
from outrank.dataio import CSV_COLUMNS

GOOD_ROW = ("alpha,PG,20,600,300,90,160,30,80,30,40,120,240,"
            "20,80,120,40,5,10,50,45,60,120")
HEADER = ",".join(CSV_COLUMNS)


class TestParsing:
    def test_fixture_parses(self, fixture_csv_bytes):
        lines = parse_boxscore_csv(fixture_csv_bytes)
        assert [l.player_id for l in lines] == ["avery", "blake", "casey",
                                                "drew", "emery", "frankie"]
        avery = lines[0]
        assert avery.position is Position.POINT_GUARD
        assert avery.games == 20
        assert avery.Min == 600.0
        assert avery.PM == 120.0

    def test_header_only_gives_empty_list(self):
        assert parse_boxscore_csv(HEADER + "\n") == []

    def test_header_order_free(self):
        columns = list(CSV_COLUMNS)
        columns.reverse()
        values = GOOD_ROW.split(",")
        reordered = ",".join(columns) + "\n" + ",".join(reversed(values)) + "\n"
        lines = parse_boxscore_csv(reordered)
        assert lines[0].player_id == "alpha"
        assert lines[0].Pts == 300.0

    def test_extra_columns_ignored(self):
        text = HEADER + ",team\n" + GOOD_ROW + ",MAD\n"
        assert parse_boxscore_csv(text)[0].player_id == "alpha"

    def test_missing_column_names_it(self):
        broken = HEADER.replace("DRB,", "")
        with pytest.raises(SchemaError, match="DRB"):
            parse_boxscore_csv(broken + "\n")

    def test_empty_input_rejected(self):
        with pytest.raises(SchemaError):
            parse_boxscore_csv("")

    def test_non_numeric_cell_reports_row_and_column(self):
        bad = HEADER + "\n" + GOOD_ROW.replace(",600,", ",lots,") + "\n"
        with pytest.raises(RowValueError, match=r"row 2.*'Min'"):
            parse_boxscore_csv(bad)

    def test_invariant_violation_reports_row(self):
        # P2 made above attempted.
        bad_values = GOOD_ROW.split(",")
        bad_values[CSV_COLUMNS.index("P2")] = "999"
        with pytest.raises(RowValueError, match="row 2.*P2"):
            parse_boxscore_csv(HEADER + "\n" + ",".join(bad_values) + "\n")

    def test_duplicate_player_id(self):
        with pytest.raises(DuplicatePlayerError, match="alpha"):
            parse_boxscore_csv(HEADER + "\n" + GOOD_ROW + "\n" + GOOD_ROW + "\n")

    def test_unknown_position_code(self):
        bad = HEADER + "\n" + GOOD_ROW.replace(",PG,", ",QB,") + "\n"
        with pytest.raises(RowValueError, match="position"):
            parse_boxscore_csv(bad)

    def test_non_integer_games(self):
        bad = HEADER + "\n" + GOOD_ROW.replace(",20,", ",20.5,") + "\n"
        with pytest.raises(RowValueError, match="games"):
            parse_boxscore_csv(bad)

    def test_blank_lines_skipped(self):
        text = HEADER + "\n\n" + GOOD_ROW + "\n\n"
        assert len(parse_boxscore_csv(text)) == 1

    def test_bytes_and_str_equivalent(self, fixture_csv_bytes):
        a = parse_boxscore_csv(fixture_csv_bytes)
        b = parse_boxscore_csv(fixture_csv_bytes.decode("utf-8"))
        assert a == b


class TestRoundTrip:
    def test_write_then_parse_is_identity_on_values(self, fixture_csv_bytes):
        lines = parse_boxscore_csv(fixture_csv_bytes)
        assert parse_boxscore_csv(write_boxscore_csv(lines)) == lines

    def test_write_is_a_fixed_point(self, fixture_csv_bytes):
        once = write_boxscore_csv(parse_boxscore_csv(fixture_csv_bytes))
        twice = write_boxscore_csv(parse_boxscore_csv(once))
        assert once == twice

    def test_fractional_stats_round_trip(self):
        values = GOOD_ROW.split(",")
        values[CSV_COLUMNS.index("Min")] = "600.1"
        values[CSV_COLUMNS.index("PM")] = "-12.75"
        text = HEADER + "\n" + ",".join(values) + "\n"
        lines = parse_boxscore_csv(text)
        assert lines[0].Min == 600.1
        again = parse_boxscore_csv(write_boxscore_csv(lines))
        assert again == lines
