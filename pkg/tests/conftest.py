from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[1]
CONFIG_DIR = REPO_ROOT / "configs"


@pytest.fixture(scope="session")
def reference_config_path():
    return CONFIG_DIR / "reference-12pan.json"


@pytest.fixture(scope="session")
def block_config_path():
    return CONFIG_DIR / "block-n2.json"
