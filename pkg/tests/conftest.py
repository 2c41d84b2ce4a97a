import pytest

from homcommon.graphons import sample_graphon


@pytest.fixture(scope="session")
def graphon_suite():
    """The seeded 100-graphon sample suite shared across test modules."""
    return [sample_graphon(seed, 4) for seed in range(100)]


@pytest.fixture(scope="session")
def small_suite(graphon_suite):
    return graphon_suite[:20]
