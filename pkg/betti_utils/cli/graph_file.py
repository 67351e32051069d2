"""
betti-utilities - cli/graph_file.py

Plain text graph files:

    # comment
    vertices 5
    edge 2 1
    weight 2 3

Licensed under the MIT License.
"""
import logging
from typing import Dict, Optional, Tuple

from betti_utils.graph.weighted_oriented_graph import GraphError, WeightedOrientedGraph, build_graph

logger = logging.getLogger(__name__)


class GraphFileError(ValueError):
    """ Malformed graph file, carries the offending line number """

    def __init__(self, line_number: Optional[int], message: str):
        self.line_number = line_number
        prefix = "line {}: ".format(line_number) if line_number is not None else ""
        super().__init__(prefix + message)


def _integers(line_number: int, directive: str, tokens, count: int) -> Tuple[int, ...]:
    if len(tokens) != count:
        raise GraphFileError(line_number, "expected {} integer(s) after '{}'".format(count, directive))
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise GraphFileError(line_number, "not an integer in {!r}".format(" ".join(tokens)))


def parse_graph_file(text: str) -> WeightedOrientedGraph:
    """
    Parse a graph file. Later weight lines for the same vertex win with a warning; stated
    weights of source vertices are overridden with a warning.

    :param text: file contents
    :return: :class:`WeightedOrientedGraph`
    :raises GraphFileError: malformed directive, missing or repeated vertices line, bad index
    """
    n = None
    edges: Dict[Tuple[int, int], int] = {}
    weights: Dict[int, int] = {}
    weight_lines: Dict[int, int] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        directive, *tokens = line.split()

        if directive == "vertices":
            if n is not None:
                raise GraphFileError(line_number, "'vertices' given more than once")
            (n,) = _integers(line_number, directive, tokens, 1)
            if n < 1:
                raise GraphFileError(line_number, "vertex count must be positive")
            continue

        if directive not in ("edge", "weight"):
            raise GraphFileError(line_number, "unknown directive {!r}".format(directive))
        if n is None:
            raise GraphFileError(line_number, "'vertices' must come before '{}'".format(directive))

        first, second = _integers(line_number, directive, tokens, 2)
        if directive == "edge":
            for v in (first, second):
                if not 1 <= v <= n:
                    raise GraphFileError(line_number, "vertex {} out of range 1..{}".format(v, n))
            if first == second:
                raise GraphFileError(line_number, "loop at vertex {}".format(first))
            if (second, first) in edges:
                raise GraphFileError(
                    line_number,
                    "edge {} {} is anti-parallel to line {}".format(first, second, edges[(second, first)]),
                )
            edges.setdefault((first, second), line_number)
        else:
            if not 1 <= first <= n:
                raise GraphFileError(line_number, "vertex {} out of range 1..{}".format(first, n))
            if second < 1:
                raise GraphFileError(line_number, "weight must be positive, got {}".format(second))
            if first in weights:
                logger.warning(
                    "line %d: weight of vertex %d repeated, replacing %d from line %d",
                    line_number, first, weights[first], weight_lines[first],
                )
            weights[first] = second
            weight_lines[first] = line_number

    if n is None:
        raise GraphFileError(None, "missing 'vertices' line")
    try:
        graph = build_graph(n, list(edges), weights)
    except GraphError as error:
        raise GraphFileError(None, str(error))

    for v, w in sorted(weights.items()):
        if graph.weight(v) != w:
            logger.warning(
                "line %d: weight %d of source vertex %d normalized to 1", weight_lines[v], w, v
            )
    return graph


def read_graph_file(path: str) -> WeightedOrientedGraph:
    with open(path) as graph_file:
        return parse_graph_file(graph_file.read())


def render_graph_file(graph: WeightedOrientedGraph, comment: Optional[str] = None) -> str:
    """
    Graph file text; only weights other than 1 are written.

    :param graph: graph to render
    :param comment: optional first comment line
    :return: file contents ending in a newline
    """
    lines = ["# {}".format(comment)] if comment else []
    lines.append("vertices {}".format(graph.n))
    lines.extend("edge {} {}".format(u, v) for u, v in graph.edges)
    lines.extend("weight {} {}".format(v, graph.weight(v)) for v in graph.vertices if graph.weight(v) != 1)
    return "\n".join(lines) + "\n"
