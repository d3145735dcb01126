"""
Tests for process settings and tracker configuration
"""

import pytest
from pydantic import ValidationError

from src.config import Settings, get_settings, settings
from src.trackers.config import TrackerConfig


class TestSettings:
    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("TENEIG_THREADS", raising=False)
        s = Settings(_env_file=None)
        assert s.threads == 4
        assert s.show_progress is False

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("TENEIG_THREADS", "2")
        monkeypatch.setenv("TENEIG_LOG_LEVEL", "debug")
        s = Settings(_env_file=None)
        assert s.threads == 2
        assert s.log_level == "DEBUG"

    def test_invalid_threads(self, monkeypatch):
        monkeypatch.setenv("TENEIG_THREADS", "0")
        with pytest.raises(ValidationError):
            Settings(_env_file=None)

    def test_unknown_log_level(self):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, log_level="chatty")

    def test_debug_mode_lowers_console_level(self):
        assert Settings(_env_file=None, debug_mode=True).console_level() == "DEBUG"

    def test_cross_field_validation(self):
        with pytest.raises(ValueError, match="TENEIG_THREADS"):
            Settings(_env_file=None, threads=300).validate_required_settings()
        Settings(_env_file=None, threads=8).validate_required_settings()

    def test_log_folder_created(self, temp_dir):
        folder = temp_dir / "logs" / "nested"
        s = Settings(_env_file=None, log_folder_path=folder)
        assert folder.is_dir()
        s.validate_required_settings()

    def test_singleton(self):
        assert get_settings() is settings


class TestTrackerConfig:
    def test_defaults(self):
        cfg = TrackerConfig()
        assert cfg.newton_tol == 1e-10
        assert cfg.duplicate_tol == 1e-6
        assert cfg.cond_threshold == 1e10
        assert cfg.imag_tol == 1e-8
        assert cfg.singular_imag_tol == 1e-4

    def test_default_s0_depends_on_dimension(self):
        assert TrackerConfig().resolved_s0(3) == -80.0
        assert TrackerConfig(s0=-12.0).resolved_s0(3) == -12.0

    def test_nonnegative_s0_rejected(self):
        with pytest.raises(ValidationError):
            TrackerConfig(s0=0.0)

    @pytest.mark.parametrize("field", ["newton_tol", "duplicate_tol", "imag_tol", "local_dim_eps", "far_norm"])
    def test_tolerances_must_be_positive(self, field):
        with pytest.raises(ValidationError):
            TrackerConfig(**{field: 0.0})

    def test_duplicate_tol_below_one(self):
        with pytest.raises(ValidationError):
            TrackerConfig(duplicate_tol=2.0)

    def test_iteration_limits(self):
        with pytest.raises(ValidationError):
            TrackerConfig(max_corrector_iters=0)

    def test_far_norm_within_blowup_norm(self):
        with pytest.raises(ValidationError):
            TrackerConfig(far_norm=1e9, blowup_norm=1e8)
        assert TrackerConfig(far_norm=1e8, blowup_norm=1e8).far_norm == 1e8

    def test_unknown_field_rejected(self):
        with pytest.raises(ValidationError):
            TrackerConfig(tolerance=1e-3)

    def test_frozen(self):
        cfg = TrackerConfig()
        with pytest.raises(ValidationError):
            cfg.newton_tol = 1e-3

    def test_with_overrides_ignores_none(self):
        cfg = TrackerConfig().with_overrides(duplicate_tol=1e-5, imag_tol=None)
        assert cfg.duplicate_tol == 1e-5
        assert cfg.imag_tol == 1e-8

    def test_with_overrides_validates(self):
        with pytest.raises(ValidationError):
            TrackerConfig().with_overrides(duplicate_tol=-1.0)
