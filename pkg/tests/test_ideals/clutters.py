##
# Licensed under the MIT License.
##
import pytest

from normlab.clutter import Clutter, edge_ideal

# the 4 edges on 6 vertices whose normalization needs x1*x2*x3*x4*x5*x6 in degree 2
SIX_VERTEX_EDGES = ((1, 2, 5), (1, 3, 4), (2, 3, 6), (4, 5, 6))

SIX_VERTEX_COVERS = [
    (1, 6),
    (2, 4),
    (3, 5),
    (1, 2, 5),
    (1, 3, 4),
    (2, 3, 6),
    (4, 5, 6),
]


@pytest.fixture()
def six_vertex_clutter():
    return Clutter(6, SIX_VERTEX_EDGES)


@pytest.fixture()
def six_vertex_ideal(six_vertex_clutter):
    return edge_ideal(six_vertex_clutter)


@pytest.fixture()
def triangle():
    return Clutter(3, ((1, 2), (2, 3), (1, 3)))


@pytest.fixture()
def triangle_ideal(triangle):
    return edge_ideal(triangle)


@pytest.fixture()
def path():
    return Clutter(4, ((1, 2), (2, 3), (3, 4)))


@pytest.fixture()
def path_ideal(path):
    return edge_ideal(path)
