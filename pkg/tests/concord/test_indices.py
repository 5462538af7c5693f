"""Tests for the observed pair-counting indices."""

from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sklearn.metrics import adjusted_rand_score, rand_score

from concord.contingency import summarize_sparse
from concord.exceptions import DegenerateNormalization, TooFewItems
from concord.indices import (
    ari_normalized,
    ari_unnormalized,
    compare,
    compare_table,
    mari,
    mri,
    pair_sums,
    ri,
    theta0_hat,
)
from concord.labels import factorize

TOLERANCE = 1e-12

small_instances = st.integers(min_value=2, max_value=12).flatmap(
    lambda n: st.tuples(
        st.integers(1, 4).flatmap(
            lambda k: st.lists(st.integers(0, k - 1), min_size=n, max_size=n)
        ),
        st.integers(1, 4).flatmap(
            lambda ell: st.lists(st.integers(0, ell - 1), min_size=n, max_size=n)
        ),
    )
)


def _summary(c1, c2):
    return summarize_sparse(c1, c2)


def test_crossed_indices(crossed):
    """Test every index on the all-ones 2x2 table."""
    s = _summary(*crossed)

    assert mri(s) == 0.0
    assert ri(s) == pytest.approx(1 / 3, abs=TOLERANCE)
    assert ari_unnormalized(s) == pytest.approx(-2 / 9, abs=TOLERANCE)
    assert ari_normalized(s) == pytest.approx(-0.5, abs=TOLERANCE)
    assert mari(s) == 0.0
    sums = pair_sums(s)
    assert (sums.sum_P, sums.sum_T, sums.sum_Q, sums.prod_P) == (0, 4, 0, 4)


def test_two_block_indices(two_blocks):
    """Test every index on identical clusterings with two clusters of three."""
    s = _summary(*two_blocks)

    assert mri(s) == pytest.approx(0.4, abs=TOLERANCE)
    assert mari(s) == pytest.approx(0.2, abs=TOLERANCE)
    assert theta0_hat(s) == pytest.approx(0.2, abs=TOLERANCE)
    # 2 * 6/15 - 2 * 6 * 6 / 15**2
    assert ari_unnormalized(s) == pytest.approx(0.48, abs=TOLERANCE)
    assert ari_normalized(s) == pytest.approx(1.0, abs=TOLERANCE)
    assert pair_sums(s).sum_Q == 18


def test_pair_sums_same_two_pairs(make_labels):
    """Test the partition sums of identical clusterings with two pairs."""
    labels = make_labels([0, 0, 1, 1])

    sums = pair_sums(_summary(labels, labels))

    assert (sums.sum_P, sums.sum_T, sums.sum_Q, sums.prod_P) == (2, 0, 2, 4)


def test_pair_sums_singletons(singletons, make_labels):
    """Test that an all-singleton clustering zeroes every partition sum."""
    other = make_labels([0, 1, 0, 1, 1])

    sums = pair_sums(_summary(singletons[0], other))

    assert (sums.sum_P, sums.sum_T, sums.sum_Q, sums.prod_P) == (0, 0, 0, 0)


def test_one_cluster(one_cluster):
    """Test identical single-cluster inputs."""
    s = _summary(*one_cluster)

    assert mri(s) == 1.0
    assert ri(s) == 1.0
    assert mari(s) == 0.0
    assert ari_unnormalized(s) == 0.0
    with pytest.raises(DegenerateNormalization):
        ari_normalized(s)


def test_singletons(singletons):
    """Test identical all-singleton inputs."""
    s = _summary(*singletons)

    assert mri(s) == 0.0
    assert ri(s) == 1.0
    assert ari_unnormalized(s) == 0.0
    with pytest.raises(DegenerateNormalization):
        ari_normalized(s)


@pytest.mark.parametrize("n", range(2, 30))
def test_one_cluster_partition_cardinalities(n, make_labels):
    """Test that all-ones indicators give the partition class sizes."""
    labels = make_labels([0] * n)

    sums = pair_sums(_summary(labels, labels))

    assert sums.sum_P == comb(n, 2)
    assert sums.sum_T == n * (n - 1) * (n - 2)
    assert sums.sum_Q == 6 * comb(n, 4)


def test_too_few_items(make_labels):
    """Test the minimum item counts of each index."""
    three = make_labels([0, 0, 1])
    s = _summary(three, three)

    assert mri(s) == pytest.approx(1 / 3)
    with pytest.raises(TooFewItems):
        mari(s)
    with pytest.raises(TooFewItems):
        theta0_hat(s)

    one = _summary(make_labels([0]), make_labels([0]))
    for index in (mri, ri, ari_unnormalized, ari_normalized):
        with pytest.raises(TooFewItems):
            index(one)


def test_compare_report(crossed):
    """Test the full report on the all-ones 2x2 table."""
    report = compare(*crossed)

    assert report.n == 4
    assert (report.num_clusters_1, report.num_clusters_2) == (2, 2)
    assert report.mri == report.theta_hat == 0.0
    assert report.mari == 0.0
    assert report.theta0_hat == 0.0
    assert report.ari_normalized == pytest.approx(-0.5)
    assert report.issues == {}


def test_compare_one_cluster_records_degenerate_normalization(one_cluster):
    """Test that an undefined normalized ARI is reported as an issue, not NaN."""
    report = compare(*one_cluster)

    assert (report.ri, report.mri, report.mari) == (1.0, 1.0, 0.0)
    assert report.ari_normalized is None
    assert report.issues == {"ari_normalized": "DegenerateNormalization"}


def test_compare_three_items_omits_mari(make_labels):
    """Test that the MARI slot carries TooFewItems for n = 3."""
    report = compare(make_labels([0, 0, 1]), make_labels([0, 1, 1]))

    assert report.mari is None
    assert report.theta0_hat is None
    assert report.issues["mari"] == "TooFewItems"


def test_compare_single_item(make_labels):
    """Test that a single item has no defined index."""
    with pytest.raises(TooFewItems):
        compare(make_labels(["a"]), make_labels(["b"]))


def test_compare_table():
    """Test comparing from a tabulated contingency matrix."""
    report = compare_table(np.array([[3, 0], [0, 3]]))

    assert report.mri == pytest.approx(0.4)
    assert report.mari == pytest.approx(0.2)


@settings(max_examples=200, deadline=None)
@given(small_instances)
def test_symmetry(lists):
    """Test that every index is unchanged by swapping the clusterings."""
    c1, c2 = factorize(np.array(lists[0])), factorize(np.array(lists[1]))

    assert compare(c1, c2).model_dump() == compare(c2, c1).model_dump() | {
        "num_clusters_1": c1.num_clusters,
        "num_clusters_2": c2.num_clusters,
    }


@settings(max_examples=200, deadline=None)
@given(small_instances, st.randoms(use_true_random=False))
def test_relabeling_invariance(lists, random):
    """Test that permuting cluster labels leaves every index unchanged."""
    c1, c2 = factorize(np.array(lists[0])), factorize(np.array(lists[1]))
    permutation = list(range(c1.num_clusters))
    random.shuffle(permutation)
    relabeled = factorize(np.array([f"c{permutation[a]}" for a in c1.assignments]))

    assert compare(relabeled, c2).model_dump() == compare(c1, c2).model_dump()


@settings(max_examples=200, deadline=None)
@given(small_instances)
def test_report_invariants(lists):
    """Test index ranges and the RI/MRI linkage."""
    c1, c2 = factorize(np.array(lists[0])), factorize(np.array(lists[1]))
    s = _summary(c1, c2)
    report = compare(c1, c2)
    total = comb(s.n, 2)

    assert 0.0 <= report.mri <= 1.0
    assert 0.0 <= report.ri <= 1.0
    assert report.ri == pytest.approx(
        1 + (2 * s.pairs_both - s.pairs_1 - s.pairs_2) / total, abs=TOLERANCE
    )
    if report.mari is not None:
        assert report.mari <= report.theta_hat + TOLERANCE
    sums = pair_sums(s)
    assert sums.prod_P == sums.sum_P + sums.sum_T + sums.sum_Q


def test_merge_monotonicity(rng, make_labels):
    """Test that fusing two clusters of the first clustering never lowers the MRI."""
    checked = 0
    while checked < 500:
        n = int(rng.integers(2, 40))
        c1 = make_labels(rng.integers(0, int(rng.integers(2, 8)), n).tolist())
        c2 = make_labels(rng.integers(0, int(rng.integers(1, 8)), n).tolist())
        if c1.num_clusters < 2:
            continue
        a, b = rng.choice(c1.num_clusters, size=2, replace=False)
        fused = make_labels(np.where(c1.assignments == b, a, c1.assignments).tolist())

        assert mri(_summary(c1, c2)) <= mri(_summary(fused, c2))
        checked += 1


def test_matches_sklearn(rng, random_pair):
    """Test RI and normalized ARI against scikit-learn on random inputs."""
    for _ in range(50):
        n = int(rng.integers(10, 300))
        c1, c2 = random_pair(n, int(rng.integers(2, 12)), int(rng.integers(2, 12)))
        report = compare(c1, c2)

        assert report.ri == pytest.approx(
            rand_score(c1.assignments, c2.assignments), rel=1e-9, abs=1e-12
        )
        assert report.ari_normalized == pytest.approx(
            adjusted_rand_score(c1.assignments, c2.assignments), rel=1e-9, abs=1e-12
        )
