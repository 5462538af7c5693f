"""Pydantic models for contingency-table statistics and pair sums."""

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ContingencySummary(BaseModel):
    """Sufficient statistics of the n_kl contingency table.

    All sums are exact Python integers.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    s_cells2: int
    s_rows2: int
    s_cols2: int
    s_rcm: int
    nonzero_cells: int
    num_clusters_1: int = Field(ge=1)
    num_clusters_2: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_invariants(self) -> "ContingencySummary":
        n = self.n
        if not n <= self.s_cells2 <= min(self.s_rows2, self.s_cols2):
            raise ValueError("expected n <= s_cells2 <= min(s_rows2, s_cols2)")
        if max(self.s_rows2, self.s_cols2) > n * n:
            raise ValueError("marginal square sums cannot exceed n^2")
        if self.s_rcm < self.s_cells2:
            raise ValueError("s_rcm must be at least s_cells2")
        if not 1 <= self.nonzero_cells <= n:
            raise ValueError("nonzero_cells must lie in [1, n]")
        # sum of n_x^2 - n = 2 * sum C(n_x, 2) is always even
        for total in (self.s_cells2, self.s_rows2, self.s_cols2):
            if (total - n) % 2:
                raise ValueError("square sums must have the parity of n")
        return self

    @property
    def pairs_1(self) -> int:
        """Pairs co-clustered in the first clustering, sum_P c1."""
        return (self.s_rows2 - self.n) // 2

    @property
    def pairs_2(self) -> int:
        """Pairs co-clustered in the second clustering, sum_P c2."""
        return (self.s_cols2 - self.n) // 2

    @property
    def pairs_both(self) -> int:
        """Pairs co-clustered in both clusterings, sum_P c1 c2."""
        return (self.s_cells2 - self.n) // 2

    def swapped(self) -> "ContingencySummary":
        """Return the summary of the transposed table."""
        return self.model_copy(
            update={
                "s_rows2": self.s_cols2,
                "s_cols2": self.s_rows2,
                "num_clusters_1": self.num_clusters_2,
                "num_clusters_2": self.num_clusters_1,
            }
        )


class PairSums(BaseModel):
    """Sums of c1 x c2 over pairs-of-pairs split by shared indices.

    ``sum_P`` covers identical pairs, ``sum_T`` pairs sharing one index,
    ``sum_Q`` disjoint pairs; ``prod_P`` is the product of the two pair counts.
    """

    model_config = ConfigDict(frozen=True)

    sum_P: int = Field(ge=0)  # noqa: N815
    sum_T: int = Field(ge=0)  # noqa: N815
    sum_Q: int = Field(ge=0)  # noqa: N815
    prod_P: int = Field(ge=0)  # noqa: N815

    @model_validator(mode="after")
    def _check_decomposition(self) -> "PairSums":
        if self.prod_P != self.sum_P + self.sum_T + self.sum_Q:
            raise ValueError("prod_P must equal sum_P + sum_T + sum_Q")
        return self
