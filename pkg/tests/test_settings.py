"""TOML config loading and profile overlays."""

import logging

from pdmchannel.config.settings import Settings, get_settings, load_config


def test_default_profile(config_dir):
    settings = get_settings(config_dir=config_dir)
    assert settings.k == 1.0
    assert settings.radius == 1.0
    assert settings.t_nodes == 96
    assert settings.fd_nodes == 399
    assert settings.verify_n_max == 2
    assert settings.seed == 7
    assert settings.logging_level_num == logging.WARNING


def test_profile_overlay_merges_sections(config_dir):
    settings = get_settings("fast", config_dir)
    assert settings.k == 2.0
    assert settings.q == 1.0
    assert settings.verify_n_max == 1
    assert settings.seed == 7


def test_missing_profile_falls_back_to_default(config_dir):
    assert load_config("nope", config_dir) == load_config(None, config_dir)


def test_missing_config_dir_uses_builtin_defaults(tmp_path):
    assert load_config(config_dir=tmp_path / "absent") == {}
    settings = get_settings(config_dir=tmp_path / "absent")
    assert settings.k == 1.0
    assert settings.verify_k_values == [0.5, 1.0, 2.5]
    assert settings.verify_q_values == [1.0, 2.0]
    assert settings.verify_residual_levels == 8
    assert settings.report_format == "json"
    assert settings.logging_format == "console"


def test_logging_level_is_case_insensitive():
    settings = Settings.from_dict({"logging": {"level": "debug"}})
    assert settings.logging_level == "DEBUG"
    assert settings.logging_level_num == logging.DEBUG
