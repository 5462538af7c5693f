"""Pydantic models used by the brute-force oracle."""

import numpy as np
from pydantic import BaseModel, ConfigDict


class Indicator(BaseModel):
    """Co-membership indicators over all unordered pairs i < j.

    Pairs are listed in ``numpy.triu_indices`` order; ``first[p] < second[p]``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    first: np.ndarray
    second: np.ndarray
    c1_same: np.ndarray
    c2_same: np.ndarray


class PartitionSizes(BaseModel):
    """Number of ordered pairs-of-pairs sharing 2, 1 or 0 item indices."""

    model_config = ConfigDict(frozen=True)

    pairs: int
    triplets: int
    quadruplets: int
