"""Application configuration management."""

import os

from dotenv import load_dotenv

from concord.constants import (
    DEFAULT_DENSE_CAP,
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_MC_BLOCK,
    ENV_DENSE_CAP,
    ENV_ENUMERATION_CAP,
    ENV_MC_BLOCK,
)

# Load environment variables
load_dotenv()


class Settings:
    """Application settings loaded from environment variables."""

    def __init__(self):
        """Initialize settings from environment variables."""
        self.dense_cap = self._get_positive_int_env(ENV_DENSE_CAP, DEFAULT_DENSE_CAP)
        self.enumeration_cap = self._get_positive_int_env(
            ENV_ENUMERATION_CAP, DEFAULT_ENUMERATION_CAP
        )
        self.mc_block = self._get_positive_int_env(ENV_MC_BLOCK, DEFAULT_MC_BLOCK)

    def _get_positive_int_env(self, key: str, default: int) -> int:
        """Get a positive integer environment variable.

        Args:
            key: Environment variable name
            default: Value used when the environment variable is not set

        Returns:
            Environment variable value as an integer

        Raises:
            ValueError: If the variable is set to something other than a positive integer
        """
        raw = os.getenv(key)
        if raw is None or not raw.strip():
            return default
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(
                f"Environment variable {key} must be an integer, got {raw!r}"
            ) from None
        if value < 1:
            raise ValueError(f"Environment variable {key} must be >= 1, got {value}")
        return value


# Global settings instance
settings = Settings()
