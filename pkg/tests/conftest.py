from pathlib import Path

import numpy as np
import pytest

from weakprobe.scenarios import scenario_r1

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


@pytest.fixture
def rng():
    return np.random.default_rng(20260811)


@pytest.fixture
def r1_setup():
    return scenario_r1()


@pytest.fixture
def config_dir():
    return CONFIG_DIR
