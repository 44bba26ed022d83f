import pathlib

import pytest

from discprox import run_sweep

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent
GOLDEN_DIR = pathlib.Path(__file__).resolve().parent / "golden"
SCENES_DIR = REPO_ROOT / "scenes"


@pytest.fixture(scope="session")
def sweep_12_24():
    """The acceptance-scale sweep, shared by several criteria."""
    return run_sweep(12, 24)


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def scenes_dir():
    return SCENES_DIR
