"""Shared fixtures.  The main polynomial table is expensive enough that
it is computed once per session and reused wherever needed."""

import pytest
from hypothesis import HealthCheck, settings

from classinv.classpoly import compute_ramanujan

from golden_data import MAIN_TABLE

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def main_table_results():
    """PolynomialResult for every n in the main table, at default digits."""
    return {n: compute_ramanujan(n) for n in sorted(MAIN_TABLE)}
