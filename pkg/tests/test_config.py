"""
Settings Tests

Tests for defaults and NCMODEL_* environment overrides.
"""

from ncmodel.core.config import Settings, get_settings


class TestSettings:
    """Tests for the Settings model."""

    def test_defaults(self, monkeypatch):
        """Verify the desk-scale bounds."""
        monkeypatch.delenv("NCMODEL_CLASSIFY_MAX_N", raising=False)

        s = Settings()

        assert s.ENUM_ENTRY_BOUND == 8
        assert s.CLASSIFY_MAX_N == 12
        assert s.SUBSET_SCAN_MAX_P == 8
        assert s.MAX_BLOWUPS == 256
        assert s.SAMPLER_SEED == 0
        assert s.is_development

    def test_env_override(self, monkeypatch):
        """Verify environment variables with the NCMODEL_ prefix win."""
        monkeypatch.setenv("NCMODEL_CLASSIFY_MAX_N", "5")
        monkeypatch.setenv("NCMODEL_ENVIRONMENT", "production")

        s = Settings()

        assert s.CLASSIFY_MAX_N == 5
        assert not s.is_development

    def test_unprefixed_variable_ignored(self, monkeypatch):
        """Verify a bare variable name does not leak in."""
        monkeypatch.setenv("MAX_BLOWUPS", "3")

        assert Settings().MAX_BLOWUPS == 256

    def test_cached(self):
        """Verify get_settings returns one shared instance."""
        assert get_settings() is get_settings()
