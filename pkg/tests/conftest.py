"""Shared fixtures: named example polytopes and a reproducible random corpus.

The corpus is session-scoped so that per-polytope caches (lattice point
scans, triangulations, generator reports) are shared across test modules.
"""

import pytest

from polycanon import families
from polycanon.checks import default_corpus
from polycanon.polytope import Polytope


@pytest.fixture(scope="session")
def corpus():
    """At least 300 random hulls, dimension <= 3, coordinates in [-3, 3],
    at most 8 candidate vertices each."""
    return default_corpus(seed=0, count=300, dims=(2, 3), coord_bound=3,
                          max_candidates=8)


@pytest.fixture(scope="session")
def unit_square():
    return families.unit_cube(2)


@pytest.fixture(scope="session")
def unit_cube():
    return families.unit_cube(3)


@pytest.fixture(scope="session")
def unit_triangle():
    return families.unit_simplex(2)


@pytest.fixture(scope="session")
def segment():
    return Polytope.from_vertices([(0,), (2,)], name="segment")


@pytest.fixture(scope="session")
def flat_triangle():
    """A two-dimensional simplex embedded in three-dimensional space."""
    return Polytope.from_vertices([(0, 0, 0), (1, 0, 1), (0, 1, 1)],
                                  name="flat-triangle")


@pytest.fixture(scope="session")
def point_polytope():
    return Polytope.from_vertices([(2, -1)], name="point")
