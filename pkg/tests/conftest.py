import random

import pytest

from dtsic import (build_catalog, classify, design_from_twin, pph_quartets,
                   rep_of_vector)


@pytest.fixture(scope="session")
def tetra():
    return build_catalog("tetrahedron")


@pytest.fixture(scope="session")
def dual():
    return build_catalog("tetrahedron-dual")


@pytest.fixture(scope="session")
def hesse():
    return build_catalog("hesse")


@pytest.fixture(scope="session")
def hoggar():
    return build_catalog("hoggar")


@pytest.fixture(scope="session")
def twin():
    return build_catalog("hoggar-twin")


@pytest.fixture(scope="session")
def classification(hoggar):
    return classify(hoggar)


@pytest.fixture(scope="session")
def twin_design(hoggar, twin):
    return design_from_twin(hoggar, twin)


@pytest.fixture(scope="session")
def twin_reps(hoggar, twin):
    return [rep_of_vector(hoggar, twin.vectors[i]) for i in range(64)]


@pytest.fixture(scope="session")
def quartets(twin_design):
    return pph_quartets(twin_design)


@pytest.fixture
def rng():
    return random.Random(20250809)
