"""Pydantic models for computed indices, model moments and bias values."""

from pydantic import BaseModel, ConfigDict, Field


class IndexReport(BaseModel):
    """Observed pair-counting indices for one pair of clusterings.

    Indices that are undefined for the input are ``None`` and their error name
    is recorded in ``issues``.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    num_clusters_1: int
    num_clusters_2: int
    ri: float
    mri: float
    ari_unnormalized: float
    ari_normalized: float | None = None
    mari: float | None = None
    theta_hat: float
    theta0_hat: float | None = None
    issues: dict[str, str] = Field(default_factory=dict)


class MomentReport(BaseModel):
    """Moments of the MRI and RI under the multinomial model."""

    model_config = ConfigDict(frozen=True)

    theta: float
    theta0: float
    theta_ri: float
    theta0_ri: float
    n: int | None = None
    sigma2: float | None = None
    e_ari: float | None = None


class BiasReport(BaseModel):
    """Bias of the hypergeometric null adjustment under the multinomial model.

    ``bias`` carries no leading factor 2; ``bias_ari`` is the bias of the full
    ARI adjustment term, twice ``bias``.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    bias: float
    bias_ari: float
    bound: float


class MonteCarloSummary(BaseModel):
    """Replicate means and standard errors of observed indices under a model."""

    model_config = ConfigDict(frozen=True)

    n: int
    reps: int
    mean_mri: float
    var_mri: float
    se_mri: float
    mean_ari_unnormalized: float
    se_ari_unnormalized: float
    mean_mari: float | None = None
    se_mari: float | None = None
