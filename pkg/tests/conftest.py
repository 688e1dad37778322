import pytest

from mtrsched.model import Instance, Network


@pytest.fixture
def four_node() -> Network:
    """Triangle 1-2-3 with pendant node 4 hanging off node 3."""
    return Network(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture
def four_node_instance(four_node) -> Instance:
    demands = {(1, 2): 1, (1, 3): 1, (2, 1): 1, (2, 3): 1,
               (3, 1): 1, (3, 2): 1, (3, 4): 2, (4, 3): 1}
    return Instance(four_node, tuple(demands[l] for l in four_node.links))


@pytest.fixture
def five_node() -> Network:
    """Triangle 1-2-3 with a path 3-4-5 attached."""
    return Network(5, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])


@pytest.fixture
def seven_tree() -> Network:
    """Depth-2 tree: 1-{2,3,4}, 2-{5,6}, 4-7.  Bipartite."""
    return Network(7, [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (4, 7)])


@pytest.fixture
def seven_tree_instance(seven_tree) -> Instance:
    return Instance(seven_tree, (9, 8, 10, 6, 3, 4, 2, 8, 5, 7, 8, 7))
