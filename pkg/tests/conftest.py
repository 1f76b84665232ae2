import os

import pytest
from hypothesis import HealthCheck, settings

from primorial_gap.primes import PrimeEngine

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    path = tmp_path_factory.mktemp("prime-cache")
    os.environ["PRIMORIAL_GAP_CACHE"] = str(path)
    return path


@pytest.fixture(scope="session")
def engine(cache_dir):
    """One shared engine so heavy sieves and pi results amortize."""
    return PrimeEngine(cache_dir=cache_dir)
