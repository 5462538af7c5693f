"""Pydantic model for a factorized clustering."""

import numpy as np
from pydantic import BaseModel, ConfigDict, computed_field, field_validator, model_validator


class LabelVector(BaseModel):
    """Dense 0-based cluster indices for n items (one clustering).

    ``assignments`` is stored as a read-only int64 array. Every index in
    ``[0, num_clusters)`` occurs at least once.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    assignments: np.ndarray
    num_clusters: int

    @field_validator("assignments", mode="before")
    @classmethod
    def _as_readonly_int_array(cls, value: object) -> np.ndarray:
        array = np.array(value, dtype=np.int64, copy=True)
        if array.ndim != 1:
            raise ValueError("assignments must be one-dimensional")
        if array.size == 0:
            raise ValueError("assignments must not be empty")
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check_dense(self) -> "LabelVector":
        if self.assignments.min() < 0 or self.assignments.max() >= self.num_clusters:
            raise ValueError("assignments must lie in [0, num_clusters)")
        counts = np.bincount(self.assignments, minlength=self.num_clusters)
        if np.any(counts == 0):
            raise ValueError("every cluster index must occur at least once")
        return self

    @computed_field
    @property
    def n(self) -> int:
        """Number of items."""
        return int(self.assignments.size)

    def cluster_sizes(self) -> np.ndarray:
        """Return the number of items in each cluster."""
        return np.bincount(self.assignments, minlength=self.num_clusters)
