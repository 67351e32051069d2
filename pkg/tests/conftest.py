"""
betti-utilities - tests/conftest.py

Licensed under the MIT License.
"""
import pytest

from betti_utils.graph.weighted_oriented_graph import build_graph, weight_reduce
from betti_utils.homology.field_linear_algebra import FieldSpec

EXAMPLE_EDGES = [(2, 1), (3, 2), (4, 3), (4, 5)]
EXAMPLE_WEIGHTS = {2: 3, 3: 2}

EXAMPLE_GRAPH_FILE = """# weighted path with x2 of weight 3 and x3 of weight 2
vertices 5
edge 2 1
edge 3 2
edge 4 3
edge 4 5
weight 2 3
weight 3 2
"""

EXAMPLE_DIAGRAM = (
    "        0   1   2   3   4\n"
    "-------------------------\n"
    "0:      1   -   -   -   -\n"
    "1:      -   2   -   -   -\n"
    "2:      -   1   2   -   -\n"
    "3:      -   1   2   1   -\n"
    "4:      -   -   2   3   1\n"
    "-------------------------\n"
    "Tot:    1   4   6   4   1\n"
)


def pytest_collection_modifyitems(items):
    for item in items:
        if "exhaustive" in item.nodeid:
            item.add_marker(pytest.mark.slow)
        if "cli" in item.nodeid:
            item.add_marker(pytest.mark.integration)


@pytest.fixture
def field():
    return FieldSpec()


@pytest.fixture
def example_graph():
    """ D: 2 -> 1, 3 -> 2, 4 -> 3, 4 -> 5 with w_2 = 3, w_3 = 2 """
    return build_graph(5, EXAMPLE_EDGES, EXAMPLE_WEIGHTS)


@pytest.fixture
def reduction_chain(example_graph):
    """ D, D' (x2 reduced), D'' (then x3), D''' (then x2 again, every weight 1) """
    once = weight_reduce(example_graph, 2)
    twice = weight_reduce(once, 3)
    thrice = weight_reduce(twice, 2)
    return example_graph, once, twice, thrice


@pytest.fixture
def example_graph_file(tmp_path):
    path = tmp_path / "example.graph"
    path.write_text(EXAMPLE_GRAPH_FILE)
    return str(path)
