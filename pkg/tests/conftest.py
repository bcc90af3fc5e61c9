from pathlib import Path

import pytest

from idealrank import supply_chain_case

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_PATH = REPO_ROOT / "fixtures" / "paper-case"


@pytest.fixture
def case_study():
    return supply_chain_case()


@pytest.fixture
def fixture_path() -> Path:
    return FIXTURE_PATH
