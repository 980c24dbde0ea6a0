import pytest

from twocs import from_edge_list, mask_of


def complete_graph(n):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    # center is vertex 0
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# Edge list of the 10-vertex planar counterexample, with the two triangles
# on {0,1,2} and {3,4,5}, a near-universal vertex 7, the {6,8,7} triangle,
# and the pendant vertex 9 on 8.
G10_EDGES = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
             (7, 0), (7, 1), (7, 2), (7, 3), (7, 4), (7, 5),
             (6, 7), (6, 8), (7, 8), (8, 9),
             (6, 0), (6, 3), (8, 0), (8, 1), (8, 3), (8, 4)]


@pytest.fixture(scope="session")
def g10():
    return from_edge_list(10, G10_EDGES, name="G10")


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def star3():
    return star_graph(3)


def M(*vertices):
    return mask_of(vertices)
