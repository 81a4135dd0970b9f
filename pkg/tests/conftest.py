import os

import pytest
from hypothesis import HealthCheck, settings

# Deterministic, patient profile: property tests here run real numerics,
# so per-example deadlines are meaningless noise.
settings.register_profile(
    "zetares",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("zetares")


@pytest.fixture(scope="session", autouse=True)
def isolated_cache(tmp_path_factory):
    """Point the zero cache at a session temp dir; never touch the repo."""
    path = tmp_path_factory.mktemp("zero-cache")
    old = os.environ.get("ZETARES_CACHE_DIR")
    os.environ["ZETARES_CACHE_DIR"] = str(path)
    yield str(path)
    if old is None:
        os.environ.pop("ZETARES_CACHE_DIR", None)
    else:
        os.environ["ZETARES_CACHE_DIR"] = old
