"""Tests for environment-driven settings"""
import pytest
from pydantic import ValidationError

from utils.settings import Settings


class TestSettings:
    def test_defaults(self, monkeypatch, tmp_path):
        """Test defaults without environment overrides"""
        for name in ("TOL", "MAX_ITER", "DIVERGENCE_CAP", "OBSERVER_TOL", "LOG_LEVEL"):
            monkeypatch.delenv(f"POSIFLOW_{name}", raising=False)
        settings = Settings.from_env(str(tmp_path / "absent.env"))
        assert settings.tol == 1e-9
        assert settings.max_iter == 100000
        assert settings.log_level == "WARNING"

    def test_environment_overrides(self, monkeypatch, tmp_path):
        """Test POSIFLOW_* variables"""
        monkeypatch.setenv("POSIFLOW_TOL", "1e-6")
        monkeypatch.setenv("POSIFLOW_MAX_ITER", "50")
        settings = Settings.from_env(str(tmp_path / "absent.env"))
        assert settings.tol == 1e-6
        assert settings.max_iter == 50

    def test_dotenv_file(self, monkeypatch, tmp_path):
        """Test values read from a .env file"""
        monkeypatch.delenv("POSIFLOW_DIVERGENCE_CAP", raising=False)
        env_file = tmp_path / ".env"
        env_file.write_text("POSIFLOW_DIVERGENCE_CAP=1000\n")
        settings = Settings.from_env(str(env_file))
        monkeypatch.delenv("POSIFLOW_DIVERGENCE_CAP", raising=False)
        assert settings.divergence_cap == 1000.0

    def test_invalid_value(self, monkeypatch, tmp_path):
        """Test rejection of nonpositive tolerances"""
        monkeypatch.setenv("POSIFLOW_TOL", "-1")
        with pytest.raises(ValidationError):
            Settings.from_env(str(tmp_path / "absent.env"))
