import pytest

import groebner
import fcriteria
from errors import UsageError
from config_loader import ConfigLoader, ToolkitSettings, default_config_path


def write_config(path, text):
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_defaults_without_a_file():
    settings = ToolkitSettings(environ={})
    assert settings.as_dict() == {"degree_guard": 60, "workers": 1, "term_cap": 5_000_000, "default_e": 1,
                                  "indent": 2, "log_level": "WARNING"}
    assert set(settings.sources.values()) == {"default"}


def test_precedence_flag_over_environment_over_file(tmp_path):
    path = write_config(tmp_path / "c.ini", "[Engine]\nDegree_Guard = 30\nWorkers = 2\n[Criteria]\nTerm_Cap = 100\n")
    environ = {"FROBKIT_DEGREE_GUARD": "40", "FROBKIT_WORKERS": "3"}
    settings = ToolkitSettings.load(path, overrides={"degree_guard": 50, "workers": None}, environ=environ)
    assert settings.degree_guard == 50
    assert settings.workers == 3
    assert settings.term_cap == 100
    assert settings.sources == {"degree_guard": "flag", "workers": "environment", "term_cap": "config",
                                "default_e": "default", "indent": "default", "log_level": "default"}


def test_config_path_from_the_environment(tmp_path, monkeypatch):
    path = write_config(tmp_path / "c.ini", "[Report]\nIndent = 4\n")
    monkeypatch.chdir(tmp_path)
    assert default_config_path({"FROBKIT_CONFIG": path}) == path
    assert default_config_path({}) is None
    assert ToolkitSettings.load(environ={"FROBKIT_CONFIG": path}).indent == 4


def test_bad_values_are_usage_errors(tmp_path):
    path = write_config(tmp_path / "c.ini", "[Engine]\nWorkers = many\n")
    with pytest.raises(UsageError):
        ToolkitSettings.load(path, environ={})
    with pytest.raises(UsageError):
        ToolkitSettings(environ={"FROBKIT_TERM_CAP": "lots"})
    with pytest.raises(UsageError):
        ToolkitSettings(overrides={"workers": 0}, environ={})


def test_missing_or_broken_files_fall_back(tmp_path):
    assert ConfigLoader(str(tmp_path / "none.ini")).getint("Engine", "Workers", fallback=7) == 7
    path = write_config(tmp_path / "broken.ini", "no section header\n")
    assert ConfigLoader(path).get("Engine", "Workers", fallback="x") == "x"


def test_apply_pushes_engine_limits():
    ToolkitSettings(overrides={"degree_guard": 12, "workers": 2, "term_cap": 99}, environ={}).apply()
    assert groebner.get_engine_limits() == {"degree_guard": 12, "workers": 2}
    assert fcriteria.get_term_cap() == 99


def test_loader_reads_text_and_integer_settings(tmp_path):
    path = write_config(tmp_path / "c.ini", "[Logging]\nLog_Level = DEBUG\n[Report]\nIndent = 0\n")
    loader = ConfigLoader(path)
    assert loader.has_option("Logging", "Log_Level")
    assert not loader.has_option("Engine", "Workers")
    settings = ToolkitSettings(loader, environ={})
    assert settings.log_level == "DEBUG"
    assert settings.indent == 0
    assert settings.sources["log_level"] == "config"
