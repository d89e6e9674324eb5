import logging
from pathlib import Path

import pytest
import yaml

from config import (
    BUDGET_ENV_VAR,
    KapathConfig,
    LoggingConfig,
    apply_env_overrides,
    config_summary,
    generate_default_config,
    load_config,
    override_log_level,
    save_config,
    setup_logging,
)


ROOT = Path(__file__).resolve().parent.parent


def write_yaml(path, payload):
    path.write_text(yaml.safe_dump(payload), encoding="utf-8")
    return str(path)


def test_defaults():
    config = KapathConfig()
    assert config.grid.k_values == [1, 2, 3]
    assert config.grid.a_values == [1, 2, 3, "inf"]
    assert config.grid.n_values == list(range(0, 13))
    assert config.verification.claims == ["all"]
    assert config.verification.workers == 1
    assert config.output.format == "text"
    assert config.monitoring.enabled is False


def test_save_and_load_roundtrip(tmp_path):
    config = KapathConfig()
    config.grid.n_max = 5
    config.verification.workers = 3
    config.output.format = "json"
    target = str(tmp_path / "kapath.yaml")
    save_config(config, target)
    loaded = load_config(target)
    assert loaded == config


def test_partial_file_keeps_defaults(tmp_path):
    target = write_yaml(tmp_path / "partial.yaml", {"grid": {"k_values": [2]}})
    config = load_config(target)
    assert config.grid.k_values == [2]
    assert config.grid.a_values == [1, 2, 3, "inf"]
    assert config.verification.budget == 10_000_000


def test_repository_configs_are_valid():
    assert load_config(str(ROOT / "kapath_config.yaml")).grid.n_max == 8
    acceptance = load_config(str(ROOT / "configs" / "kapath_config.acceptance.yaml"))
    assert acceptance.grid.k_values == [1, 2, 3]
    assert acceptance.verification.workers == 4


def test_missing_file():
    with pytest.raises(FileNotFoundError):
        load_config("no_existe.yaml")


@pytest.mark.parametrize("payload", [
    {"grid": {"k_values": [0]}},
    {"grid": {"a_values": ["infinito"]}},
    {"grid": {"a_values": [0]}},
    {"grid": {"n_min": 4, "n_max": 2}},
    {"verification": {"budget": 0}},
    {"verification": {"workers": 0}},
    {"output": {"format": "xml"}},
    {"logging": {"level": "TRACE"}},
    {"logging": {"module_levels": {"kapaths.sweep": "LOUD"}}},
    {"grid": {"m_max": 3}},
])
def test_invalid_values(tmp_path, payload):
    target = write_yaml(tmp_path / "bad.yaml", payload)
    with pytest.raises(ValueError):
        load_config(target)


def test_env_override(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV_VAR, "1234")
    config = apply_env_overrides(KapathConfig())
    assert config.verification.budget == 1234


@pytest.mark.parametrize("raw", ["abc", "0"])
def test_env_override_rejects_bad_values(monkeypatch, raw):
    monkeypatch.setenv(BUDGET_ENV_VAR, raw)
    with pytest.raises(ValueError):
        apply_env_overrides(KapathConfig())


def test_generate_default_config(tmp_path):
    target = tmp_path / "default.yaml"
    config = generate_default_config(str(target))
    assert target.exists()
    assert load_config(str(target)) == config


def test_config_summary():
    summary = config_summary(KapathConfig())
    assert summary["n"] == "0..12"
    assert summary["claims"] == ["all"]


def test_setup_logging_levels(tmp_path):
    config = LoggingConfig(
        level="WARNING",
        file_enabled=True,
        file_path=str(tmp_path / "logs" / "kapath.log"),
        file_rotation="size",
        module_levels={"kapaths.sweep": "DEBUG"},
    )
    setup_logging(config)
    assert logging.getLogger().level == logging.WARNING
    assert logging.getLogger("kapaths.sweep").level == logging.DEBUG
    assert (tmp_path / "logs").is_dir()
    logging.getLogger("kapaths.sweep").setLevel(logging.NOTSET)
    setup_logging(LoggingConfig())


def test_override_log_level_covers_module_levels():
    config = override_log_level(LoggingConfig(module_levels={"kapaths.sweep": "DEBUG"}), "ERROR")
    assert config.level == "ERROR"
    assert config.module_levels == {"kapaths.sweep": "ERROR"}
    with pytest.raises(ValueError):
        override_log_level(LoggingConfig(), "LOUD")


def test_save_config_writes_plain_yaml(tmp_path):
    target = tmp_path / "kapath.yaml"
    save_config(KapathConfig(), str(target))
    raw = yaml.safe_load(target.read_text(encoding="utf-8"))
    assert list(raw) == ["grid", "verification", "output", "monitoring", "logging", "name", "description", "version"]
    assert raw["grid"]["a_values"] == [1, 2, 3, "inf"]
