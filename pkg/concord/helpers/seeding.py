"""Seeded random streams and order-insensitive aggregation."""

import math

import numpy as np


def stream(seed: int, *keys: int) -> np.random.Generator:
    """Return a PCG64 generator for the stream named by ``(seed, *keys)``.

    The stream depends only on its key, never on how many other streams were
    created before it, so replicate blocks can run in any order or thread.
    """
    return np.random.default_rng(np.random.SeedSequence([seed, *keys]))


def cell_key(scenario: int, k: int, epsilon: float, n: int) -> tuple[int, int, int, int]:
    """Integer key naming one simulation grid cell."""
    return scenario, k, round(epsilon * 1_000_000_000), n


def mean_and_variance(values: np.ndarray) -> tuple[float, float]:
    """Mean and unbiased variance using compensated (fsum) summation."""
    count = int(values.size)
    mean = math.fsum(values.tolist()) / count
    if count < 2:
        return mean, 0.0
    deviations = (values - mean).tolist()
    return mean, math.fsum(d * d for d in deviations) / (count - 1)


def mean_and_standard_error(values: np.ndarray) -> tuple[float, float]:
    """Mean and standard error of the mean."""
    mean, variance = mean_and_variance(values)
    return mean, math.sqrt(variance / values.size)
