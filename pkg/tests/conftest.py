import random

import pytest
from click.testing import CliRunner

from sphere.geom_core import DotConfig, random_config
from utils.config_loader import load_named_configuration
from utils.settings_manager import get_settings, reset_settings


@pytest.fixture
def named():
    """Loads a named configuration from config/configurations.json."""
    return load_named_configuration


@pytest.fixture
def seeded_config():
    def make(n, seed=0, bound=64):
        return random_config(n, random.Random(n * 1000 + seed), bound)
    return make


@pytest.fixture
def planar():
    """Builds a configuration from (u, v) pairs; strings and ints are both accepted."""
    def make(*points):
        return DotConfig.from_planar(points)
    return make


@pytest.fixture
def isolated_settings(tmp_path, monkeypatch):
    monkeypatch.setenv("DOTS_LOGS_DIRECTORY", str(tmp_path / "logs"))
    monkeypatch.setenv("DOTS_STORE_LOGS_ENABLED", "true")
    reset_settings()
    yield get_settings()
    reset_settings()


@pytest.fixture
def runner(isolated_settings):
    return CliRunner()
