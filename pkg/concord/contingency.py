"""Sufficient statistics of the n_kl contingency table.

The sparse path never allocates the K x L table: item pairs are sorted
lexicographically by 16-bit radix passes (numpy's stable sort is a radix sort
on 16-bit keys), and the non-zero cells are read off as run lengths in one
scan. Every sum is returned as an exact Python integer.
"""

import numpy as np
from prefect.logging import get_logger

from concord.config import settings
from concord.constants import INT64_CUBE_LIMIT, RADIX_BITS
from concord.exceptions import AllocationRefused, InputError, LengthMismatch
from concord.models.contingency import ContingencySummary
from concord.models.labels import LabelVector

logger = get_logger("concord.contingency")

_DIGIT_MASK = (1 << RADIX_BITS) - 1


def _stable_radix_argsort(keys: np.ndarray, num_keys: int) -> np.ndarray:
    """Stable argsort of integer keys in [0, num_keys), least significant digit first."""
    order = np.arange(keys.size)
    shift = 0
    while True:
        digit = ((keys[order] >> shift) & _DIGIT_MASK).astype(np.uint16)
        order = order[np.argsort(digit, kind="stable")]
        shift += RADIX_BITS
        if (num_keys - 1) >> shift == 0:
            return order


def _exact(values: np.ndarray, n: int) -> np.ndarray:
    # Products of three counts are bounded by n**3.
    if n <= INT64_CUBE_LIMIT:
        return values.astype(np.int64, copy=False)
    return values.astype(object)


def _summary_from_cells(
    n: int,
    cells: np.ndarray,
    cell_rows: np.ndarray,
    cell_cols: np.ndarray,
    row_sizes: np.ndarray,
    col_sizes: np.ndarray,
) -> ContingencySummary:
    """Build the summary from the non-zero cells and both marginals."""
    cells = _exact(cells, n)
    row_sizes = _exact(row_sizes, n)
    col_sizes = _exact(col_sizes, n)
    return ContingencySummary(
        n=n,
        s_cells2=int((cells * cells).sum()),
        s_rows2=int((row_sizes * row_sizes).sum()),
        s_cols2=int((col_sizes * col_sizes).sum()),
        s_rcm=int((row_sizes[cell_rows] * cells * col_sizes[cell_cols]).sum()),
        nonzero_cells=int(cells.size),
        num_clusters_1=int(row_sizes.size),
        num_clusters_2=int(col_sizes.size),
    )


def _check_lengths(c1: LabelVector, c2: LabelVector) -> None:
    if c1.n != c2.n:
        raise LengthMismatch(c1.n, c2.n)


def summarize_sparse(c1: LabelVector, c2: LabelVector) -> ContingencySummary:
    """Summarize the contingency table of two clusterings in O(n) time and space.

    Args:
        c1: First clustering
        c2: Second clustering, over the same items

    Returns:
        ContingencySummary equal to the one of the dense table

    Raises:
        LengthMismatch: If the clusterings have different lengths
    """
    _check_lengths(c1, c2)
    n = c1.n
    first, second = c1.assignments, c2.assignments

    # LSD order: second key, then stable pass on the first key
    order = _stable_radix_argsort(second, c2.num_clusters)
    order = order[_stable_radix_argsort(first[order], c1.num_clusters)]
    rows, cols = first[order], second[order]

    starts = np.flatnonzero(
        np.concatenate(([True], (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1])))
    )
    cells = np.diff(np.append(starts, n))

    summary = _summary_from_cells(
        n,
        cells,
        rows[starts],
        cols[starts],
        c1.cluster_sizes(),
        c2.cluster_sizes(),
    )
    logger.debug(
        "sparse summary n=%d K=%d L=%d nonzero=%d",
        n,
        c1.num_clusters,
        c2.num_clusters,
        summary.nonzero_cells,
    )
    return summary


def summarize_dense(
    c1: LabelVector, c2: LabelVector, cap: int | None = None
) -> ContingencySummary:
    """Summarize through the full K x L table; O(n + KL) reference baseline.

    Args:
        c1: First clustering
        c2: Second clustering, over the same items
        cap: Largest number of table cells allowed (defaults to settings.dense_cap)

    Returns:
        ContingencySummary identical to ``summarize_sparse``

    Raises:
        LengthMismatch: If the clusterings have different lengths
        AllocationRefused: If K * L exceeds the cap
    """
    _check_lengths(c1, c2)
    cap = settings.dense_cap if cap is None else cap
    K, L = c1.num_clusters, c2.num_clusters
    if K * L > cap:
        raise AllocationRefused(K * L, cap)

    n = c1.n
    table = np.bincount(c1.assignments * L + c2.assignments, minlength=K * L)
    table = table.reshape(K, L)
    row_sizes = table.sum(axis=1)
    col_sizes = table.sum(axis=0)

    if n > INT64_CUBE_LIMIT:
        cell_rows, cell_cols = np.nonzero(table)
        return _summary_from_cells(
            n, table[cell_rows, cell_cols], cell_rows, cell_cols, row_sizes, col_sizes
        )

    return ContingencySummary(
        n=n,
        s_cells2=int((table * table).sum()),
        s_rows2=int((row_sizes * row_sizes).sum()),
        s_cols2=int((col_sizes * col_sizes).sum()),
        s_rcm=int((row_sizes[:, None] * table * col_sizes[None, :]).sum()),
        nonzero_cells=int(np.count_nonzero(table)),
        num_clusters_1=K,
        num_clusters_2=L,
    )


def summarize_table(table: np.ndarray) -> ContingencySummary:
    """Summarize an already tabulated K x L matrix of counts.

    Empty rows and columns are clusters nobody belongs to and are dropped.

    Raises:
        InputError: If the table is not a matrix of non-negative integers with n >= 1
    """
    counts = np.asarray(table)
    if counts.ndim != 2:
        raise InputError("contingency table must be two-dimensional")
    if counts.dtype.kind == "f":
        if not np.all(np.isfinite(counts)) or np.any(counts != np.round(counts)):
            raise InputError("contingency table must hold integer counts")
    elif counts.dtype.kind not in "iu":
        raise InputError("contingency table must hold integer counts")
    if np.any(counts < 0):
        raise InputError("contingency table counts must be non-negative")

    counts = counts.astype(np.int64)
    counts = counts[counts.sum(axis=1) > 0][:, counts.sum(axis=0) > 0]
    n = int(counts.sum())
    if n < 1:
        raise InputError("contingency table must count at least one item")

    cell_rows, cell_cols = np.nonzero(counts)
    return _summary_from_cells(
        n,
        counts[cell_rows, cell_cols],
        cell_rows,
        cell_cols,
        counts.sum(axis=1),
        counts.sum(axis=0),
    )
