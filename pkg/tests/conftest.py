import pytest

from mirrorcheck import polytopes as pt


@pytest.fixture(scope="session")
def octahedron():
    return pt.hull([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])


@pytest.fixture(scope="session")
def cube():
    return pt.hull([(x, y, z) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)])


@pytest.fixture(scope="session")
def quartic_simplex():
    return pt.hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])


@pytest.fixture(scope="session")
def wp1113_simplex():
    return pt.hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -3)])


@pytest.fixture(scope="session")
def quintic_simplex():
    return pt.hull([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
                    (-1, -1, -1, -1)])


@pytest.fixture(scope="session")
def hexagon():
    return pt.hull([(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)])
