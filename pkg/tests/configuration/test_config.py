"""
betti-utilities - tests/configuration/test_config.py

Licensed under the MIT License.
"""
import os

import pytest

from betti_utils.configuration.project_configuration import ProjectConfiguration, find_file
from betti_utils.configuration.settings import BettiSettings, SettingsError, load_settings


def test_config(tmp_path, monkeypatch) -> None:
    monkeypatch.chdir(tmp_path)
    new_config_file = "testconfiguration.yml"
    project_name = "Test Project"

    # Missing file falls back to the packaged defaults without writing
    proj_config = ProjectConfiguration(new_config_file)
    assert not os.path.isfile(new_config_file)
    assert proj_config.get_value("field_prime") == 32003
    assert len(proj_config.get_settings()) == 9

    proj_config.configuration[ProjectConfiguration.project_key] = project_name
    proj_config.add_setting("note", "Free text", "hello")
    assert proj_config.project_name() == project_name
    assert proj_config.get_value("note") == "hello"
    assert len(proj_config.get_settings()) == 10

    # Save it and ensure the file exists
    proj_config.save_configuration()
    assert os.path.isfile(new_config_file)

    # Load it and check what we have
    proj_config = ProjectConfiguration(new_config_file)
    assert proj_config.project_name() == project_name
    assert proj_config.get_value("note") == "hello"
    assert len(proj_config.get_settings()) == 10

    # Change a setting and test we get the right value
    proj_config.set_value("field_prime", 101)
    assert proj_config.get_value("field_prime") == 101
    assert proj_config.get_value("lcm_generator_cap") == 18
    assert proj_config.get_value("missing") is None

    # Unknown settings are added by set_value
    proj_config.set_value("added_later", 3)
    assert proj_config.get_value("added_later") == 3


def test_find_file(tmp_path, monkeypatch):
    nested = tmp_path / "a" / "b"
    nested.mkdir(parents=True)
    (tmp_path / "this_is_higher_file.txt").write_text("")
    (nested / "this_is_file.txt").write_text("")
    monkeypatch.chdir(nested)

    found, path = find_file("this_is_file.txt")
    assert found and path == str(nested)

    found, path = find_file("this_is_higher_file.txt")
    assert found and path == str(tmp_path)

    found, _ = find_file("not_this_is_file.txt")
    assert not found


def test_load_settings_defaults(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert load_settings() == BettiSettings()


def test_load_settings_overrides(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    settings = load_settings(overrides={"field_prime": 101, "seed": None, "n_jobs": 2})
    assert settings.field_prime == 101
    assert settings.seed == BettiSettings().seed
    assert settings.n_jobs == 2


def test_load_settings_from_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    proj_config = ProjectConfiguration("project.yml")
    proj_config.set_value("explore_max_n", 4)
    proj_config.save_configuration()

    assert load_settings("project.yml").explore_max_n == 4


@pytest.mark.parametrize(
    "overrides",
    [{"field_prime": 32004}, {"n_jobs": 0}, {"lcm_generator_cap": 30}, {"explore_max_n": 9}],
)
def test_load_settings_rejects(tmp_path, monkeypatch, overrides):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(SettingsError):
        load_settings(overrides=overrides)
