"""Common test fixtures for the concord package."""

import numpy as np
import pytest

from concord.labels import factorize
from concord.models.labels import LabelVector


@pytest.fixture
def make_labels():
    """Fixture returning a factory that factorizes a list of tokens."""

    def make(tokens: list) -> LabelVector:
        return factorize(np.asarray(tokens))

    return make


@pytest.fixture
def crossed(make_labels):
    """Fixture providing two 2-cluster clusterings whose 2x2 table is all ones."""
    return make_labels([0, 0, 1, 1]), make_labels([0, 1, 0, 1])


@pytest.fixture
def two_blocks(make_labels):
    """Fixture providing identical clusterings with two clusters of three items."""
    return make_labels([0, 0, 0, 1, 1, 1]), make_labels([0, 0, 0, 1, 1, 1])


@pytest.fixture
def one_cluster(make_labels):
    """Fixture providing identical single-cluster clusterings of five items."""
    return make_labels([0] * 5), make_labels([0] * 5)


@pytest.fixture
def singletons(make_labels):
    """Fixture providing identical all-singleton clusterings of five items."""
    return make_labels(list(range(5))), make_labels(list(range(5)))


@pytest.fixture
def rng():
    """Fixture providing a seeded numpy generator."""
    return np.random.default_rng(20240613)


@pytest.fixture
def random_pair(rng, make_labels):
    """Fixture returning a factory for random clusterings of the same n items."""

    def make(n: int, k: int, ell: int) -> tuple[LabelVector, LabelVector]:
        return (
            make_labels(rng.integers(0, k, n).tolist()),
            make_labels(rng.integers(0, ell, n).tolist()),
        )

    return make
