from __future__ import annotations

from pathlib import Path

import pytest

from scalesim import default_space, load_scenario

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"


@pytest.fixture(scope="session")
def space():
    return default_space()


@pytest.fixture(scope="session")
def default_scenario():
    return load_scenario(SCENARIO_DIR / "default.yaml")


@pytest.fixture(scope="session")
def burst_scenario():
    return load_scenario(SCENARIO_DIR / "burst.yaml")
