import logging
from pathlib import Path

import pytest

from casestudy import BuildingSpec

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def house_a() -> BuildingSpec:
    return BuildingSpec("House A", L1=13.7, L2=14.9, B1=8.7, B2=4.6, H=3.6)


@pytest.fixture
def house_b() -> BuildingSpec:
    return BuildingSpec("House B", L1=22.0, L2=19.5, B1=8.8, B2=8.5, H=4.3)


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch, tmp_path):
    """Run every test from an empty directory with no lshape/CI variables set"""
    for name in ("LSHAPE_FORMAT", "LSHAPE_LOG_FILE", "LSHAPE_LOG_LEVEL", "CI"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)

    # main.setup_logging replaces the root handlers; put pytest's back afterwards
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)
