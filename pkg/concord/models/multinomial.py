"""Pydantic models for the multinomial model."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class JointDistribution(BaseModel):
    """Joint cluster-pair probabilities pi_kl with their marginals.

    Build instances with ``concord.multinomial.as_distribution`` so that the
    probability invariants are checked.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    probs: np.ndarray
    row_marginals: np.ndarray
    col_marginals: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        """Return (K, L)."""
        return self.probs.shape

    def is_independent(self, tolerance: float = 1e-12) -> bool:
        """Whether pi_kl equals the product of its marginals everywhere."""
        product = np.outer(self.row_marginals, self.col_marginals)
        return bool(np.allclose(self.probs, product, rtol=0.0, atol=tolerance))


class ScenarioSpec(BaseModel):
    """One of the three simulation scenarios with K = L clusters.

    Out-of-range values fail validation; ``scenario_distribution`` re-checks
    instances built with ``model_construct``.
    """

    model_config = ConfigDict(frozen=True)

    scenario_id: int = Field(ge=1, le=3)
    k: int = Field(ge=2)
    epsilon: float = Field(gt=0.0, lt=1.0)
