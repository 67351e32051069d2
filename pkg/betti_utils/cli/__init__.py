"""
betti-utilities - cli/__init__.py

Licensed under the MIT License.
"""
from betti_utils.cli.explore import ExperimentBounds, Question, compare_reduction, compare_underlying, run_explore
from betti_utils.cli.graph_file import GraphFileError, parse_graph_file, read_graph_file, render_graph_file

__all__ = [
    "ExperimentBounds",
    "GraphFileError",
    "Question",
    "compare_reduction",
    "compare_underlying",
    "parse_graph_file",
    "read_graph_file",
    "render_graph_file",
    "run_explore",
]
