"""Tests for runtime configuration."""

from specsup.config import WORKERS_ENV, default_workers


class TestDefaultWorkers:
    """Test the SPECSUP_WORKERS default."""

    def test_unset(self, monkeypatch):
        """Test the fallback of one worker."""
        monkeypatch.delenv(WORKERS_ENV, raising=False)
        assert default_workers() == 1

    def test_valid(self, monkeypatch):
        """Test a positive integer is used."""
        monkeypatch.setenv(WORKERS_ENV, "4")
        assert default_workers() == 4

    def test_invalid_values_ignored(self, monkeypatch):
        """Test non-integer and non-positive values fall back to one."""
        monkeypatch.setenv(WORKERS_ENV, "many")
        assert default_workers() == 1
        monkeypatch.setenv(WORKERS_ENV, "0")
        assert default_workers() == 1
