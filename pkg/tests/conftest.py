import os

import pytest

from config import load_run_config

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


@pytest.fixture(scope="session")
def run_config():
    return load_run_config()


@pytest.fixture(scope="session")
def golden_tables() -> str:
    with open(os.path.join(GOLDEN_DIR, "tables.tsv"), encoding="utf-8") as f:
        return f.read()
