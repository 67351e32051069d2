"""
betti-utilities - graph/families.py

Licensed under the MIT License.
"""
from enum import Enum
from typing import List, Optional, Sequence, Union

import numpy as np

from betti_utils.graph.weighted_oriented_graph import (
    GraphError,
    WeightedOrientedGraph,
    build_graph,
)

NATURAL = "natural"


class FamilyKind(Enum):
    path = "path"
    cycle = "cycle"
    complete_natural = "complete_natural"
    star_center_sink = "star_center_sink"
    rooted_tree = "rooted_tree"

    @classmethod
    def has_value(cls, value):
        return value in cls._value2member_map_


def _oriented(u: int, v: int, sign: str):
    if sign == "+":
        return u, v
    if sign == "-":
        return v, u
    raise GraphError("Orientation entries must be '+' or '-', got {!r}".format(sign))


def _orientation_list(orientation: Union[str, Sequence[str]], count: int) -> List[str]:
    if isinstance(orientation, str):
        if orientation == NATURAL:
            return ["+"] * count
        orientation = orientation.replace(",", "")
    signs = list(orientation)
    if len(signs) != count:
        raise GraphError("Expected {} orientation entries, got {}".format(count, len(signs)))
    return signs


def family(
    kind: Union[FamilyKind, str],
    n: int,
    weights: Optional[Sequence[int]] = None,
    orientation: Union[str, Sequence[str]] = NATURAL,
    parents: Optional[Sequence[int]] = None,
) -> WeightedOrientedGraph:
    """
    Build a member of one of the standard graph families.

    Path and cycle accept a per edge orientation: '+' keeps i -> i+1 (and n -> 1 for the closing
    edge of a cycle), '-' reverses it. A rooted tree takes a parent array with 0 for the root,
    which must be vertex 1; edges point away from the root.

    :param kind: :class:`FamilyKind` or its value
    :param n: vertex count
    :param weights: one weight per vertex, default all 1
    :param orientation: "natural" or a sequence of '+'/'-'
    :param parents: parent of each vertex, rooted_tree only
    :return: :class:`WeightedOrientedGraph`
    """
    if not isinstance(kind, FamilyKind):
        if not FamilyKind.has_value(kind):
            raise GraphError("Unknown family {!r}".format(kind))
        kind = FamilyKind(kind)
    if n < 2:
        raise GraphError("Families need at least 2 vertices")
    if weights is None:
        weights = [1] * n
    if len(weights) != n:
        raise GraphError("Expected {} weights, got {}".format(n, len(weights)))

    if kind == FamilyKind.path:
        signs = _orientation_list(orientation, n - 1)
        edges = [_oriented(i, i + 1, signs[i - 1]) for i in range(1, n)]
    elif kind == FamilyKind.cycle:
        if n < 3:
            raise GraphError("A cycle needs at least 3 vertices")
        signs = _orientation_list(orientation, n)
        edges = [_oriented(i, i % n + 1, signs[i - 1]) for i in range(1, n + 1)]
    elif kind == FamilyKind.complete_natural:
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    elif kind == FamilyKind.star_center_sink:
        edges = [(i, n) for i in range(1, n)]
    else:
        edges = _tree_edges(n, parents)

    return build_graph(n, edges, {v: w for v, w in enumerate(weights, start=1)})


def _tree_edges(n: int, parents: Optional[Sequence[int]]):
    if parents is None or len(parents) != n:
        raise GraphError("A rooted tree needs a parent array of length {}".format(n))
    if parents[0] != 0:
        raise GraphError("Vertex 1 is the root and must have parent 0")
    edges = []
    for child in range(2, n + 1):
        parent = parents[child - 1]
        if not 1 <= parent <= n or parent == child:
            raise GraphError("Invalid parent {} for vertex {}".format(parent, child))
        edges.append((parent, child))

    for start in range(2, n + 1):
        seen = {start}
        v = start
        while v != 1:
            v = parents[v - 1]
            if v in seen:
                raise GraphError("Parent array contains a cycle through vertex {}".format(v))
            seen.add(v)
    return edges


def random_graph(
    rng: np.random.Generator, n: int, edge_probability: float = 0.5, max_weight: int = 3
) -> WeightedOrientedGraph:
    """
    Random weighted oriented graph: each vertex pair is joined with the given probability and
    oriented uniformly, weights uniform in 1..max_weight.

    :param rng: numpy random generator
    :param n: vertex count
    :param edge_probability: probability of an edge per pair
    :param max_weight: largest weight drawn
    :return: :class:`WeightedOrientedGraph`
    """
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < edge_probability:
                edges.append((i, j) if rng.random() < 0.5 else (j, i))
    weights = rng.integers(1, max_weight + 1, size=n)
    return build_graph(n, edges, {v: int(w) for v, w in enumerate(weights, start=1)})


def random_rooted_tree(
    rng: np.random.Generator, n: int, min_weight: int = 2, max_weight: int = 3
) -> WeightedOrientedGraph:
    """ Random tree rooted at vertex 1 with non root weights in min_weight..max_weight """
    parents = [0] + [int(rng.integers(1, child)) for child in range(2, n + 1)]
    weights = [1] + [int(w) for w in rng.integers(min_weight, max_weight + 1, size=n - 1)]
    return family(FamilyKind.rooted_tree, n, weights, parents=parents)


def attach_leaf_sink(graph: WeightedOrientedGraph, u: int, weight: int) -> WeightedOrientedGraph:
    """
    Add vertex n+1 with the single edge u -> n+1.

    :param graph: graph to extend
    :param u: attachment vertex
    :param weight: weight of the new vertex
    :return: :class:`WeightedOrientedGraph`
    """
    weights = {v: graph.weight(v) for v in graph.vertices}
    weights[graph.n + 1] = weight
    return build_graph(graph.n + 1, list(graph.edges) + [(u, graph.n + 1)], weights)
