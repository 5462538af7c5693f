"""Prefect workflows timing the sparse and dense contingency summaries."""

import statistics
import time
from collections.abc import Callable
from itertools import product

from prefect import flow, get_run_logger, task
from prefect.cache_policies import NONE

from concord.contingency import summarize_dense, summarize_sparse
from concord.helpers.seeding import stream
from concord.labels import factorize
from concord.models.labels import LabelVector
from concord.models.run_config import BenchRow, RunConfig
from workflows.constants import BENCH_CELL_TASK, BENCH_FLOW, BENCH_WARMUP_RUNS


def uniform_labels(n: int, k: int, seed: int) -> tuple[LabelVector, LabelVector]:
    """Two independent clusterings of n items with uniform labels in [0, k)."""
    rng = stream(seed, n, k)
    return factorize(rng.integers(0, k, n)), factorize(rng.integers(0, k, n))


def median_seconds(run: Callable[[], object], repeats: int) -> float:
    """Median wall time of ``repeats`` calls after the warmup calls."""
    for _ in range(BENCH_WARMUP_RUNS):
        run()
    timings = []
    for _ in range(repeats):
        start = time.perf_counter()
        run()
        timings.append(time.perf_counter() - start)
    return statistics.median(timings)


@task(name=BENCH_CELL_TASK, cache_policy=NONE)
def bench_cell(n: int, k: int, repeats: int, seed: int, dense_cap: int) -> BenchRow:
    """Time both summaries on one sampled uniform-independent input.

    The dense timing is left empty when its K x L table would exceed ``dense_cap``.
    """
    logger = get_run_logger()
    c1, c2 = uniform_labels(n, k, seed)

    sparse_seconds = median_seconds(lambda: summarize_sparse(c1, c2), repeats)
    cells = c1.num_clusters * c2.num_clusters
    if cells > dense_cap:
        logger.warning(f"Skipping dense summary for n={n} K={k}: {cells} cells > {dense_cap}")
        dense_seconds = None
    else:
        dense_seconds = median_seconds(
            lambda: summarize_dense(c1, c2, cap=dense_cap), repeats
        )

    logger.info(f"n={n} K={k}: sparse {sparse_seconds:.4f}s dense {dense_seconds}")
    return BenchRow(
        n=n,
        k=k,
        repeats=repeats,
        sparse_seconds=sparse_seconds,
        dense_seconds=dense_seconds,
    )


@flow(name=BENCH_FLOW, persist_result=False)
def bench_flow(config: RunConfig) -> list[BenchRow]:
    """Benchmark every (n, K) cell, one at a time so timings do not contend.

    Args:
        config: Validated run options

    Returns:
        One row per (n, K) cell
    """
    logger = get_run_logger()
    cells = list(product(config.n_grid, config.k_grid))
    logger.info(f"Benchmarking {len(cells)} cells, median of {config.reps}")

    rows = [
        bench_cell(n, k, config.reps, config.seed, config.dense_cap) for n, k in cells
    ]

    logger.info(f"Finished {len(rows)} benchmark cells")
    return rows
