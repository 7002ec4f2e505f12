from __future__ import annotations

import json
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> dict:
    with open(FIXTURES / name) as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def tl_n3() -> dict:
    return load_fixture("tl_n3.json")


@pytest.fixture(scope="session")
def matrices_n3() -> dict:
    return load_fixture("matrices_n3.json")


def as_strings(m) -> list:
    if hasattr(m, "to_strings"):
        return m.to_strings()
    return [[str(x) for x in row] if isinstance(row, (list, tuple)) else str(row) for row in m]
