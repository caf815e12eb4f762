import pytest

from orispec import Graph, generate_corpus, tree_from_edges

# Worked example 1: K4 minus one edge plus nothing -- the 4-vertex graph
# with edges {01, 12, 23, 03, 13}; its two named spanning trees.
EX1_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]
EX1_PATH_TREE = [(0, 1), (1, 2), (2, 3)]
EX1_STAR_TREE = [(0, 1), (1, 2), (1, 3)]

# Worked example 2: the 4-cycle with its path tree.
C4_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3)]
C4_PATH_TREE = [(0, 1), (1, 2), (2, 3)]


@pytest.fixture
def ex1():
    return Graph.of(4, EX1_EDGES)


@pytest.fixture
def ex1_path_tree(ex1):
    return tree_from_edges(ex1, EX1_PATH_TREE)


@pytest.fixture
def ex1_star_tree(ex1):
    return tree_from_edges(ex1, EX1_STAR_TREE)


@pytest.fixture
def c4():
    return Graph.of(4, C4_EDGES)


@pytest.fixture
def c4_path_tree(c4):
    return tree_from_edges(c4, C4_PATH_TREE)


@pytest.fixture(scope="session")
def corpus5():
    return generate_corpus(5)


@pytest.fixture(scope="session")
def corpus6():
    return generate_corpus(6)


@pytest.fixture(scope="session")
def corpus7():
    return generate_corpus(7)
