"""
betti-utilities - tests/cli/test_graph_file.py

Licensed under the MIT License.
"""
import logging

import numpy as np
import pytest

from betti_utils.cli.graph_file import GraphFileError, parse_graph_file, read_graph_file, render_graph_file
from betti_utils.graph.families import random_graph
from tests.conftest import EXAMPLE_GRAPH_FILE


def test_parse_example(example_graph):
    assert parse_graph_file(EXAMPLE_GRAPH_FILE) == example_graph


def test_read_example(example_graph_file, example_graph):
    assert read_graph_file(example_graph_file) == example_graph


def test_single_edge():
    graph = parse_graph_file("vertices 2\nedge 1 2\n")
    assert graph.edges == ((1, 2),)
    assert graph.weights == (1, 1)


def test_comments_and_blank_lines():
    graph = parse_graph_file("# header\n\nvertices 3  # three\nedge 1 2 # first\n\n")
    assert graph.n == 3 and graph.edges == ((1, 2),)


@pytest.mark.parametrize(
    "text, line_number, fragment",
    [
        ("vertices 2\nedge 1 1\n", 2, "loop"),
        ("edge 1 2\nvertices 2\n", 1, "must come before"),
        ("vertices 2\nvertices 3\n", 2, "more than once"),
        ("vertices 2\nedge 1 3\n", 2, "out of range"),
        ("vertices 2\nweight 3 2\n", 2, "out of range"),
        ("vertices 2\nweight 2 0\n", 2, "positive"),
        ("vertices 2\nedge 1 x\n", 2, "not an integer"),
        ("vertices 2\nedge 1\n", 2, "expected 2"),
        ("vertices 2\narc 1 2\n", 2, "unknown directive"),
        ("vertices 0\n", 1, "positive"),
        ("vertices 3\nedge 1 2\nedge 2 1\n", 3, "line 2"),
    ],
)
def test_parse_errors(text, line_number, fragment):
    with pytest.raises(GraphFileError) as error:
        parse_graph_file(text)
    assert error.value.line_number == line_number
    assert str(error.value).startswith("line {}: ".format(line_number))
    assert fragment in str(error.value)


def test_missing_vertices_line():
    with pytest.raises(GraphFileError) as error:
        parse_graph_file("# nothing\n")
    assert error.value.line_number is None


def test_duplicate_weight_last_wins(caplog):
    with caplog.at_level(logging.WARNING):
        graph = parse_graph_file("vertices 2\nedge 1 2\nweight 2 3\nweight 2 4\n")
    assert graph.weight(2) == 4
    assert "repeated" in caplog.text


def test_source_weight_warning(caplog):
    with caplog.at_level(logging.WARNING):
        graph = parse_graph_file("vertices 2\nedge 1 2\nweight 1 5\n")
    assert graph.weight(1) == 1
    assert "normalized to 1" in caplog.text


def test_render(example_graph):
    assert render_graph_file(example_graph) == (
        "vertices 5\nedge 2 1\nedge 3 2\nedge 4 3\nedge 4 5\nweight 2 3\nweight 3 2\n"
    )
    assert render_graph_file(example_graph, "D").startswith("# D\n")


def test_round_trip_on_random_graphs():
    rng = np.random.default_rng(99)
    for _ in range(100):
        graph = random_graph(rng, int(rng.integers(1, 7)))
        assert parse_graph_file(render_graph_file(graph)) == graph
