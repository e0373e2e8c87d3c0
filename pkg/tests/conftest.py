import pytest

from skewdyck.paths import BOUNDED, DUAL, UNBOUNDED, count_table

BRUTE_LENGTH = 14


@pytest.fixture(scope="session")
def brute_tables():
    """Brute-force count tables at the reference length, shared across tests."""
    return {fam: count_table(fam, BRUTE_LENGTH) for fam in (BOUNDED, DUAL, UNBOUNDED)}
