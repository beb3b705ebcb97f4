import pytest
from pydantic import ValidationError

from utils.config_loader import load_config_file, load_named_configuration
from utils.logger import log_run
from utils.settings_manager import Settings, get_settings, parse_range, reset_settings
from sphere.errors import ConfigParseError


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("DOTS_MAX_RETRIES", "8")
    monkeypatch.setenv("DOTS_LOG_LEVEL", "debug")
    reset_settings()
    try:
        settings = get_settings()
        assert settings.max_retries == 8
        assert settings.log_level == "DEBUG"
        assert get_settings() is settings
    finally:
        reset_settings()


def test_invalid_grid_is_rejected(monkeypatch):
    monkeypatch.setenv("DOTS_DEFAULT_GRID", "10-4")
    with pytest.raises(ValidationError):
        Settings()


@pytest.mark.parametrize("text, expected", [("4-10", (4, 10)), ("7", (7, 7))])
def test_parse_range(text, expected):
    assert parse_range(text) == expected


@pytest.mark.parametrize("text", ["10-4", "a-b", "1-2-3", ""])
def test_parse_range_rejects(text):
    with pytest.raises(ValueError):
        parse_range(text)


def test_named_configurations():
    for name in ("five-dots", "six-dots", "center-and-triangle", "two-pairs"):
        assert load_named_configuration(name).n >= 4
    assert load_named_configuration("six-dots").n == 6
    with pytest.raises(ConfigParseError):
        load_named_configuration("seven-dots")


def test_load_config_file_defaults(tmp_path):
    assert load_config_file(str(tmp_path / "missing.json")) == {}
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    assert load_config_file(str(broken), default={"x": 1}) == {"x": 1}


def test_run_log(tmp_path):
    logs = tmp_path / "logs"
    log_run("counts", {"config_name": "five-dots"}, {"formula_match": True}, 0, "settings-test", str(logs))
    text = (logs / "settings-test.log").read_text(encoding="utf-8")
    assert '"exit_code": 0' in text
    assert '"formula_match": true' in text
