import json
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"
TEST_ALPHAS = (0.3, 0.5, 0.7, 0.9, 1.0)


@pytest.fixture(scope="session")
def oracles():
    return json.loads((DATA / "oracles.json").read_text())
