import random

import pytest

from barychi.selftest import random_finite_space, random_instance

CORPUS_SEED = 96824


@pytest.fixture(scope="session")
def engine_corpus():
    """1000 seeded random instances shared by the agreement/invariance tests."""
    rng = random.Random(CORPUS_SEED)
    return [random_instance(rng) for _ in range(1000)]


@pytest.fixture(scope="session")
def finite_corpus():
    """500 seeded random finite weighted spaces with their rho."""
    rng = random.Random(CORPUS_SEED + 1)
    return [random_finite_space(rng) for _ in range(500)]
