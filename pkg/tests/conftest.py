import os

import pytest
from hypothesis import HealthCheck, settings

from unramified import new_context

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def ctx1():
    """p=5, n=2, N=2, phi = X^2 + X + 1."""
    return new_context(5, 2, 2, [1, 1, 1])


@pytest.fixture(scope="session")
def zp25():
    """Z/25 as the degenerate n=1 ring with phi = X - 2."""
    return new_context(5, 1, 2, [23, 1])
