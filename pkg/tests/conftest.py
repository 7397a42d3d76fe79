import json
import os
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"
FIXTURE_CSV = DATA_DIR / "fixture_players.csv"
EXPECTED_JSON = DATA_DIR / "expected_fixture.json"

# Real-league season file, not shipped; point the env var at it to enable the
# dataset-conditional checks.
ACB_CSV = Path(os.environ.get("OUTRANK_ACB_CSV", DATA_DIR / "acb_2014_15.csv"))


@pytest.fixture(scope="session")
def fixture_csv_bytes() -> bytes:
    return FIXTURE_CSV.read_bytes()


@pytest.fixture(scope="session")
def fixture_lines(fixture_csv_bytes):
    from outrank import parse_boxscore_csv

    return parse_boxscore_csv(fixture_csv_bytes)


@pytest.fixture(scope="session")
def expected_fixture() -> dict:
    return json.loads(EXPECTED_JSON.read_text(encoding="utf-8"))
