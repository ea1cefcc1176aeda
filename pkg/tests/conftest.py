import os

import pytest
from hypothesis import HealthCheck, settings

from tests.graphs import complete, path, star

settings.register_profile("ci", max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("dev", max_examples=15, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "ci"))


@pytest.fixture
def k5():
    return complete(5)


@pytest.fixture
def k10():
    return complete(10)


@pytest.fixture
def star5():
    """Hub 0 with leaves 1..5."""
    return star(5)


@pytest.fixture
def path3():
    return path(3)


@pytest.fixture
def fixtures_dir():
    return os.path.join(os.path.dirname(__file__), "fixtures")
