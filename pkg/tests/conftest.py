import pytest

from lie2alg import random_algebra


@pytest.fixture(scope="session")
def corpus_1000():
    """Shared seeded corpus for the large property-based criteria."""
    return [random_algebra(seed) for seed in range(1000)]


@pytest.fixture(scope="session")
def corpus_100(corpus_1000):
    return corpus_1000[:100]
