"""Tests para validacion de configuracion con Pydantic."""

import pytest
from pydantic import ValidationError

from src.utils.config_loader import apply_env_overrides, load_yaml
from src.utils.config_schemas import RunConfig, build_run_config, validate_settings


class TestSettingsValidation:
    def test_valid_minimal_settings(self):
        settings = validate_settings({})
        assert settings.computation.dim_cap == 6
        assert settings.output.results_dir == "data/results"
        assert settings.computation.op_variant == "op"

    def test_valid_full_settings(self):
        raw = {
            "project": {"name": "Test", "version": "2.0"},
            "computation": {"dim_cap": 8, "search_budget": 1000, "op_variant": "natural"},
            "homology": {"up_to": 4},
            "logging": {"level": "debug"},
        }
        settings = validate_settings(raw)
        assert settings.computation.dim_cap == 8
        assert settings.logging.level == "DEBUG"

    def test_invalid_log_level(self):
        with pytest.raises(ValidationError):
            validate_settings({"logging": {"level": "INVALID"}})

    def test_dim_cap_out_of_range(self):
        with pytest.raises(ValidationError):
            validate_settings({"computation": {"dim_cap": 13}})

    def test_invalid_variant(self):
        with pytest.raises(ValidationError):
            validate_settings({"computation": {"op_variant": "covariante"}})

    def test_results_dir_traversal(self):
        with pytest.raises(ValidationError):
            validate_settings({"output": {"results_dir": "../x"}})

    def test_up_to_must_be_below_cap(self):
        with pytest.raises(ValidationError):
            validate_settings({"computation": {"dim_cap": 3}, "homology": {"up_to": 3}})

    def test_model_dump_returns_dict(self):
        d = validate_settings({}).model_dump()
        assert isinstance(d, dict)
        assert d["homology"]["up_to"] == 3


class TestRunConfig:
    def test_overrides(self):
        settings = validate_settings({}).model_dump()
        config = build_run_config(settings, dim_cap=8, op_variant="natural", suite=None)
        assert config.dim_cap == 8
        assert config.op_variant == "natural"
        assert config.search_budget == 200_000
        assert config.suite is None

    def test_up_to_clamped_to_cap(self):
        settings = validate_settings({}).model_dump()
        config = build_run_config(settings, dim_cap=2)
        assert config.up_to == 1

    def test_suite_alias(self):
        settings = validate_settings({}).model_dump()
        assert build_run_config(settings, suite="thm62").suite == "lcolim-hocolim"

    def test_unknown_suite(self):
        with pytest.raises(ValidationError):
            RunConfig(dim_cap=6, search_budget=10, output_path="out", suite="todo")


class TestConfigLoader:
    def test_traversal_rejected(self):
        with pytest.raises(ValueError, match="traversal"):
            load_yaml("../requirements.txt")

    def test_settings_file_is_valid(self):
        validate_settings(load_yaml("settings.yaml"))

    def test_env_overrides(self, monkeypatch):
        monkeypatch.setenv("HOCOLIM_OUT_DIR", "tmp/out")
        monkeypatch.setenv("HOCOLIM_DIM_CAP", "9")
        raw = apply_env_overrides({"output": {"results_dir": "data/results"}})
        assert raw["output"]["results_dir"] == "tmp/out"
        assert raw["computation"]["dim_cap"] == 9

    def test_env_overrides_do_not_mutate_input(self, monkeypatch):
        monkeypatch.setenv("HOCOLIM_OUT_DIR", "tmp/out")
        monkeypatch.delenv("HOCOLIM_DIM_CAP", raising=False)
        original = {"output": {"results_dir": "data/results"}}
        apply_env_overrides(original)
        assert original["output"]["results_dir"] == "data/results"

    def test_bad_dim_cap_env(self, monkeypatch):
        monkeypatch.setenv("HOCOLIM_DIM_CAP", "seis")
        with pytest.raises(ValueError, match="entero"):
            apply_env_overrides({})
