"""Brute-force reference implementations for tests and benchmarks.

Nothing here is on the production path: ``indices.compare`` never calls it.
"""

from collections import Counter
from math import comb

import numpy as np

from concord.config import settings
from concord.exceptions import CapExceeded, LengthMismatch
from concord.models.contingency import ContingencySummary, PairSums
from concord.models.labels import LabelVector
from concord.models.oracle import Indicator, PartitionSizes


def _check(c1: LabelVector, c2: LabelVector, cap: int | None) -> int:
    if c1.n != c2.n:
        raise LengthMismatch(c1.n, c2.n)
    cap = settings.enumeration_cap if cap is None else cap
    if c1.n > cap:
        raise CapExceeded(f"CapExceeded: enumeration needs n <= {cap}, got {c1.n}")
    return c1.n


def indicator(c1: LabelVector, c2: LabelVector) -> Indicator:
    """Co-membership indicators c1_ij, c2_ij for every pair i < j."""
    if c1.n != c2.n:
        raise LengthMismatch(c1.n, c2.n)
    first, second = np.triu_indices(c1.n, k=1)
    a, b = c1.assignments, c2.assignments
    return Indicator(
        first=first,
        second=second,
        c1_same=(a[first] == a[second]).astype(np.int64),
        c2_same=(b[first] == b[second]).astype(np.int64),
    )


def _shared_indices(ind: Indicator) -> np.ndarray:
    i, j = ind.first, ind.second
    return (
        (i[:, None] == i[None, :]).astype(np.int64)
        + (i[:, None] == j[None, :])
        + (j[:, None] == i[None, :])
        + (j[:, None] == j[None, :])
    )


def enumerate_partition(
    c1: LabelVector, c2: LabelVector, cap: int | None = None
) -> tuple[PairSums, PartitionSizes]:
    """Visit every ordered pair of pairs and classify it by shared indices.

    Two shared indices means the same pair, one a triplet, none a quadruplet.

    Raises:
        CapExceeded: If n exceeds the enumeration cap
    """
    _check(c1, c2, cap)
    ind = indicator(c1, c2)
    shared = _shared_indices(ind)
    products = np.outer(ind.c1_same, ind.c2_same)

    sums = {
        size: int(products[shared == size].sum()) for size in (2, 1, 0)
    }
    sizes = {size: int(np.count_nonzero(shared == size)) for size in (2, 1, 0)}
    enumerated = PairSums(
        sum_P=sums[2],
        sum_T=sums[1],
        sum_Q=sums[0],
        prod_P=int(ind.c1_same.sum()) * int(ind.c2_same.sum()),
    )
    return enumerated, PartitionSizes(
        pairs=sizes[2], triplets=sizes[1], quadruplets=sizes[0]
    )


def enumerate_pair_sums(
    c1: LabelVector, c2: LabelVector, cap: int | None = None
) -> PairSums:
    """PairSums by direct enumeration over pairs-of-pairs."""
    return enumerate_partition(c1, c2, cap)[0]


def quadruplet_closed_form(s: ContingencySummary) -> int:
    """Quadruplet sum from the long closed form over n_kl, evaluated literally.

    Uses only the summary fields, never ``indices.pair_sums``.
    """
    n = s.n
    binom_cells = (s.s_cells2 - n) // 2
    binom_rows = (s.s_rows2 - n) // 2
    binom_cols = (s.s_cols2 - n) // 2
    triplets = 2 * n + s.s_rcm - s.s_cells2 - s.s_rows2 - s.s_cols2
    numerator = s.s_rows2 * s.s_cols2 - (
        4 * binom_cells
        + 4 * triplets
        + 2 * n * (binom_rows + binom_cols)
        + n * n
    )
    return numerator // 4


def triplet_counts_by_cell(
    c1: LabelVector, c2: LabelVector, cap: int | None = None
) -> dict[tuple[int, int], int]:
    """For each cell (k, l), count triples (i, j, j') with c1_ij c2_ij' = 1 directly.

    i runs over the items of the cell; j and j' are distinct and differ from i.
    """
    n = _check(c1, c2, cap)
    a, b = c1.assignments.tolist(), c2.assignments.tolist()
    counts: Counter[tuple[int, int]] = Counter()
    for i in range(n):
        for j in range(n):
            if j == i or a[j] != a[i]:
                continue
            for jp in range(n):
                if jp in (i, j) or b[jp] != b[i]:
                    continue
                counts[(a[i], b[i])] += 1
    return dict(counts)


def triplet_terms_by_cell(c1: LabelVector, c2: LabelVector) -> dict[tuple[int, int], int]:
    """Closed-form per-cell triplet terms n_kl (2 + n_k. n_.l - n_kl - n_k. - n_.l)."""
    rows, cols = c1.cluster_sizes(), c2.cluster_sizes()
    cells = Counter(zip(c1.assignments.tolist(), c2.assignments.tolist(), strict=True))
    terms = {}
    for (k, ell), n_kl in cells.items():
        n_k, n_l = int(rows[k]), int(cols[ell])
        terms[(k, ell)] = n_kl * (2 + n_k * n_l - n_kl - n_k - n_l)
    return {cell: term for cell, term in terms.items() if term}


def partition_sizes(n: int) -> PartitionSizes:
    """Closed-form class sizes C(n,2), n(n-1)(n-2) and 6 C(n,4)."""
    return PartitionSizes(
        pairs=comb(n, 2), triplets=n * (n - 1) * (n - 2), quadruplets=6 * comb(n, 4)
    )
