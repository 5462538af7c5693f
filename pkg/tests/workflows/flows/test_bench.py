"""Tests for the summary timing flow."""

import pytest

from concord.constants import BENCH_N_GRID
from concord.models.run_config import RunConfig
from workflows.flows.bench import bench_flow, median_seconds, uniform_labels


def _config(**overrides):
    return RunConfig(subcommand="bench", **overrides)


def test_uniform_labels_are_deterministic():
    """Test that the sampled labels depend only on seed, n and K."""
    first = uniform_labels(500, 7, seed=3)
    second = uniform_labels(500, 7, seed=3)

    assert first[0].assignments.tolist() == second[0].assignments.tolist()
    assert first[1].assignments.tolist() == second[1].assignments.tolist()
    assert first[0].n == first[1].n == 500
    assert first[0].num_clusters <= 7


def test_median_seconds_runs_warmup_and_repeats(mocker):
    """Test that the callable runs once per repeat plus the warmup."""
    run = mocker.Mock()

    seconds = median_seconds(run, 3)

    assert run.call_count == 4
    assert seconds >= 0.0


def test_bench_flow_small_grid():
    """Test one row per (n, K) cell with both timings."""
    rows = bench_flow(_config(n_grid=[200, 400], k_grid=[3, 5], reps=2))

    assert [(r.n, r.k) for r in rows] == [(200, 3), (200, 5), (400, 3), (400, 5)]
    for row in rows:
        assert row.repeats == 2
        assert row.sparse_seconds > 0
        assert row.dense_seconds is not None


def test_bench_flow_skips_large_dense_tables():
    """Test that the dense timing is skipped above the cell cap."""
    rows = bench_flow(_config(n_grid=[300], k_grid=[2, 50], reps=1, dense_cap=100))

    assert rows[0].dense_seconds is not None
    assert rows[1].dense_seconds is None


@pytest.mark.slow
def test_sparse_summary_beats_dense_at_large_k():
    """Test that the sparse summary is faster than the dense one at K = 5000."""
    (row,) = bench_flow(_config(n_grid=[100_000], k_grid=[5000], reps=5))

    assert row.sparse_seconds < row.dense_seconds


@pytest.mark.slow
def test_sparse_summary_scales_linearly():
    """Test that doubling n at most multiplies the sparse time by 2.5."""
    rows = bench_flow(
        _config(n_grid=list(BENCH_N_GRID), k_grid=[5000], reps=5, dense_cap=1)
    )

    assert [row.n for row in rows] == list(BENCH_N_GRID)
    for smaller, larger in zip(rows, rows[1:], strict=False):
        assert larger.dense_seconds is None
        assert larger.sparse_seconds <= 2.5 * smaller.sparse_seconds
