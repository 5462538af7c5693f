"""Observed pair-counting indices computed from a ContingencySummary.

Every quantity is assembled from exact integers and rationals; conversion to
float happens once, at the final division.
"""

from collections.abc import Callable
from fractions import Fraction
from math import comb

import numpy as np
from prefect.logging import get_logger

from concord.constants import MIN_ITEMS_PAIRS, MIN_ITEMS_QUADRUPLETS
from concord.contingency import summarize_sparse, summarize_table
from concord.exceptions import DegenerateNormalization, DegenerateResult, TooFewItems
from concord.models.contingency import ContingencySummary, PairSums
from concord.models.labels import LabelVector
from concord.models.reports import IndexReport

logger = get_logger("concord.indices")


def _require(s: ContingencySummary, minimum: int, quantity: str) -> None:
    if s.n < minimum:
        raise TooFewItems(s.n, minimum, quantity)


def mri(s: ContingencySummary) -> float:
    """Fraction of item pairs co-clustered in both clusterings.

    Raises:
        TooFewItems: If n < 2
    """
    _require(s, MIN_ITEMS_PAIRS, "MRI")
    return s.pairs_both / comb(s.n, 2)


def ri(s: ContingencySummary) -> float:
    """Rand index: fraction of pairs consistent by similarity or by difference.

    Raises:
        TooFewItems: If n < 2
    """
    _require(s, MIN_ITEMS_PAIRS, "RI")
    total = comb(s.n, 2)
    return (total + 2 * s.pairs_both - s.pairs_1 - s.pairs_2) / total


def pair_sums(s: ContingencySummary) -> PairSums:
    """Split (sum_P c1)(sum_P c2) over identical, overlapping and disjoint pairs.

    The triplet term sums, for every item in cell (k, l), the
    n_k. n_.l - n_k. - n_.l - n_kl + 2 partners (j, j') with c1_ij c2_ij' = 1;
    the quadruplet term is what remains of the product.
    """
    sum_p = s.pairs_both
    sum_t = 2 * s.n + s.s_rcm - s.s_cells2 - s.s_rows2 - s.s_cols2
    prod_p = s.pairs_1 * s.pairs_2
    return PairSums(
        sum_P=sum_p,
        sum_T=sum_t,
        sum_Q=prod_p - sum_p - sum_t,
        prod_P=prod_p,
    )


def theta0_hat(s: ContingencySummary) -> float:
    """Unbiased multinomial estimate of the MRI expectation under independence.

    Raises:
        TooFewItems: If n < 4
    """
    _require(s, MIN_ITEMS_QUADRUPLETS, "theta0 estimate")
    return pair_sums(s).sum_Q / (6 * comb(s.n, 4))


def mari(s: ContingencySummary) -> float:
    """MRI adjusted by the unbiased quadruplet estimate of its null expectation.

    Raises:
        TooFewItems: If n < 4
    """
    _require(s, MIN_ITEMS_QUADRUPLETS, "MARI")
    sums = pair_sums(s)
    value = Fraction(sums.sum_P, comb(s.n, 2)) - Fraction(
        sums.sum_Q, 6 * comb(s.n, 4)
    )
    return float(value)


def ari_unnormalized(s: ContingencySummary) -> float:
    """Unnormalized ARI: twice the MRI minus twice the hypergeometric null term.

    Raises:
        TooFewItems: If n < 2
    """
    _require(s, MIN_ITEMS_PAIRS, "ARI")
    total = comb(s.n, 2)
    value = Fraction(2 * s.pairs_both, total) - Fraction(
        2 * s.pairs_1 * s.pairs_2, total * total
    )
    return float(value)


def ari_normalized(s: ContingencySummary) -> float:
    """Classical Hubert-Arabie adjusted Rand index.

    Raises:
        TooFewItems: If n < 2
        DegenerateNormalization: If the normalizing denominator is zero
    """
    _require(s, MIN_ITEMS_PAIRS, "normalized ARI")
    expected = Fraction(s.pairs_1 * s.pairs_2, comb(s.n, 2))
    denominator = Fraction(s.pairs_1 + s.pairs_2, 2) - expected
    if denominator == 0:
        raise DegenerateNormalization()
    return float((s.pairs_both - expected) / denominator)


def report_from_summary(s: ContingencySummary) -> IndexReport:
    """Compute every index for one summary.

    Indices that are undefined for the input are left out of the report and
    named in ``issues``.

    Raises:
        TooFewItems: If n < 2 (no index is defined)
    """
    _require(s, MIN_ITEMS_PAIRS, "index report")
    issues: dict[str, str] = {}

    def attempt(name: str, index: Callable[[ContingencySummary], float]) -> float | None:
        try:
            return index(s)
        except DegenerateResult as e:
            issues[name] = type(e).__name__
            logger.warning("%s undefined for n=%d: %s", name, s.n, e)
            return None

    theta_hat = mri(s)
    return IndexReport(
        n=s.n,
        num_clusters_1=s.num_clusters_1,
        num_clusters_2=s.num_clusters_2,
        ri=ri(s),
        mri=theta_hat,
        ari_unnormalized=ari_unnormalized(s),
        ari_normalized=attempt("ari_normalized", ari_normalized),
        mari=attempt("mari", mari),
        theta_hat=theta_hat,
        theta0_hat=attempt("theta0_hat", theta0_hat),
        issues=issues,
    )


def compare(c1: LabelVector, c2: LabelVector) -> IndexReport:
    """Compare two clusterings of the same items.

    Raises:
        LengthMismatch: If the clusterings have different lengths
        TooFewItems: If n < 2
    """
    return report_from_summary(summarize_sparse(c1, c2))


def compare_table(table: np.ndarray) -> IndexReport:
    """Compare two clusterings given as an already tabulated contingency table."""
    return report_from_summary(summarize_table(table))
