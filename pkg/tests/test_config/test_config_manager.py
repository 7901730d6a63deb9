from pathlib import Path

import pytest
from pydantic import ValidationError

from src.config.config_manager import (
    AppConfig,
    ConfigManager,
    FieldsConfig,
    OutputConfig,
    get_config_manager,
    reset_config_manager,
)

REPO_CONFIG = Path(__file__).resolve().parents[2] / "config"


@pytest.fixture
def config_dir(tmp_path):
    (tmp_path / "base").mkdir()
    (tmp_path / "experiments").mkdir()
    (tmp_path / "base" / "app.yaml").write_text(
        "search:\n  node_budget: 5000\nfields:\n  characteristics: [0, 2]\nsweeps:\n  cycles_max_n: 9\n"
    )
    (tmp_path / "experiments" / "tiny.yaml").write_text("sweeps:\n  cycles_max_n: 5\n")
    return tmp_path


class TestModels:
    def test_defaults(self):
        """Test built-in defaults."""
        config = AppConfig()
        assert config.search.node_budget == 10_000_000
        assert config.fields.characteristics == [0, 2, 3, 5]
        assert config.output.format == "table"

    def test_serre_levels_validated(self):
        """Test that levels are positive, sorted and unique."""
        assert FieldsConfig(serre_levels=[3, 2, 3]).serre_levels == [2, 3]
        with pytest.raises(ValidationError):
            FieldsConfig(serre_levels=[0])

    def test_output_format_validated(self):
        """Test that unknown formats are rejected."""
        with pytest.raises(ValidationError):
            OutputConfig(format="xml")


class TestConfigManager:
    def test_repository_config_loads(self):
        """Test that the shipped configuration is valid."""
        manager = ConfigManager(REPO_CONFIG)
        assert manager.validate_config()
        assert manager.load_app_config().metadata.name == "serrecheck"

    def test_repository_branches(self):
        """Test that the shipped quick branch is listed and shrinks sweeps."""
        manager = ConfigManager(REPO_CONFIG, branch="quick")
        assert "quick" in manager.list_branches()
        quick = manager.load_app_config()
        assert quick.sweeps.power_of_cycle_max_n == 14
        assert quick.fields.characteristics == [0, 2, 3, 5]

    def test_branch_merges_over_base(self, config_dir):
        """Test deep merging of an experiment branch."""
        config = ConfigManager(config_dir, branch="tiny").load_app_config()
        assert config.sweeps.cycles_max_n == 5
        assert config.search.node_budget == 5000
        assert config.sweeps.omit_one_max_n == 20

    def test_missing_files_use_defaults(self, tmp_path):
        """Test that a missing directory yields defaults."""
        config = ConfigManager(tmp_path / "nowhere").load_app_config()
        assert config == AppConfig()

    def test_with_overrides(self, config_dir):
        """Test nested overrides over the loaded configuration."""
        manager = ConfigManager(config_dir)
        config = manager.with_overrides({"fields": {"characteristics": [3]}, "search": {"node_budget": 7}})
        assert config.fields.characteristics == [3]
        assert config.search.node_budget == 7
        assert config.sweeps.cycles_max_n == 9
        assert manager.load_app_config().search.node_budget == 5000

    def test_list_branches(self, config_dir):
        """Test branch discovery."""
        assert ConfigManager(config_dir).list_branches() == ["base", "tiny"]

    def test_validate_rejects_non_prime_characteristic(self, config_dir):
        """Test that validation checks characteristics."""
        (config_dir / "base" / "app.yaml").write_text("fields:\n  characteristics: [0, 4]\n")
        assert not ConfigManager(config_dir).validate_config()

    def test_validate_rejects_bad_values(self, config_dir):
        """Test that validation failures are reported rather than raised."""
        (config_dir / "base" / "app.yaml").write_text("search:\n  node_budget: -1\n")
        assert not ConfigManager(config_dir).validate_config()


class TestGlobalManager:
    def teardown_method(self):
        reset_config_manager()

    def test_environment(self, monkeypatch, config_dir):
        """Test that the global manager follows SERRE_CONFIG_PATH and SERRE_CONFIG_BRANCH."""
        reset_config_manager()
        monkeypatch.setenv("SERRE_CONFIG_PATH", str(config_dir))
        monkeypatch.setenv("SERRE_CONFIG_BRANCH", "tiny")
        manager = get_config_manager()
        assert manager.branch == "tiny"
        assert manager is get_config_manager()
        assert manager.load_app_config().sweeps.cycles_max_n == 5
