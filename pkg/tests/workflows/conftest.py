"""Shared fixtures for the Prefect workflow tests."""

import pytest
from prefect.testing.utilities import prefect_test_harness


@pytest.fixture(autouse=True, scope="session")
def prefect_harness():
    """Run every flow against a temporary Prefect backend."""
    with prefect_test_harness():
        yield
