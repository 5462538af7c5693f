"""Tests for environment-backed settings."""

import pytest

from concord.config import Settings
from concord.constants import (
    DEFAULT_DENSE_CAP,
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_MC_BLOCK,
)


@pytest.fixture
def clean_env(monkeypatch):
    """Fixture removing every variable Settings reads from the environment."""
    for key in (
        "CONCORD_DENSE_CAP",
        "CONCORD_ENUMERATION_CAP",
        "CONCORD_MC_BLOCK",
    ):
        monkeypatch.delenv(key, raising=False)
    return monkeypatch


def test_settings_defaults(clean_env):
    """Test the defaults used without environment overrides."""
    settings = Settings()

    assert settings.dense_cap == DEFAULT_DENSE_CAP
    assert settings.enumeration_cap == DEFAULT_ENUMERATION_CAP
    assert settings.mc_block == DEFAULT_MC_BLOCK


def test_settings_override(clean_env):
    """Test that environment variables override the defaults."""
    clean_env.setenv("CONCORD_DENSE_CAP", "1000")
    clean_env.setenv("CONCORD_ENUMERATION_CAP", "12")

    settings = Settings()

    assert settings.dense_cap == 1000
    assert settings.enumeration_cap == 12


@pytest.mark.parametrize("value", ["many", "0", "-3"])
def test_settings_invalid(clean_env, value):
    """Test that invalid values name the variable."""
    clean_env.setenv("CONCORD_MC_BLOCK", value)

    with pytest.raises(ValueError) as exc_info:
        Settings()

    assert "CONCORD_MC_BLOCK" in str(exc_info.value)
