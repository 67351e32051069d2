"""
betti-utilities - graph/structure.py

Structural predicates that do not depend on vertex labels.

Licensed under the MIT License.
"""
from typing import List, Optional, Tuple

import networkx as nx

from betti_utils.graph.weighted_oriented_graph import WeightedOrientedGraph, roles


def is_complete(graph: WeightedOrientedGraph) -> bool:
    return graph.n >= 2 and len(graph.edges) == graph.n * (graph.n - 1) // 2


def is_transitive_tournament(graph: WeightedOrientedGraph) -> bool:
    """
    Complete and acyclic, i.e. naturally oriented under some relabeling.

    :param graph: graph to inspect
    :return: `bool`
    """
    return is_complete(graph) and nx.is_directed_acyclic_graph(graph.to_networkx())


def sink_vertices(graph: WeightedOrientedGraph) -> List[int]:
    return [v for v, role in roles(graph).items() if role.is_sink]


def star_center_sink(graph: WeightedOrientedGraph) -> Optional[int]:
    """
    Center of a star whose every edge points to the center.

    :param graph: graph to inspect
    :return: the center vertex or None
    """
    if graph.n < 2 or len(graph.edges) != graph.n - 1:
        return None
    for c in graph.vertices:
        if len(graph.in_neighbors(c)) == graph.n - 1:
            return c
    return None


def is_natural_cycle(graph: WeightedOrientedGraph) -> bool:
    """
    Oriented cycle on all vertices with every edge in the same direction.

    :param graph: graph to inspect
    :return: `bool`
    """
    if graph.n < 3 or len(graph.edges) != graph.n:
        return False
    digraph = graph.to_networkx()
    if any(digraph.in_degree(v) != 1 or digraph.out_degree(v) != 1 for v in graph.vertices):
        return False
    return nx.is_weakly_connected(digraph)


def _rooted_in(digraph: nx.DiGraph) -> Optional[int]:
    sources = [v for v in digraph.nodes if digraph.in_degree(v) == 0]
    if len(sources) != 1 or digraph.number_of_nodes() < 2:
        return None
    root = sources[0]
    if len(nx.descendants(digraph, root)) == digraph.number_of_nodes() - 1:
        return root
    return None


def rooted_root(graph: WeightedOrientedGraph) -> Optional[int]:
    """
    Root of a rooted graph: the unique source, from which every vertex is reached along
    naturally oriented paths.

    :param graph: graph to inspect
    :return: root vertex or None
    """
    return _rooted_in(graph.to_networkx())


def rooted_forest_roots(graph: WeightedOrientedGraph) -> Optional[List[int]]:
    """
    Roots of the weakly connected components with at least two vertices, provided each of them
    is rooted. Isolated vertices are ignored.

    :param graph: graph to inspect
    :return: roots in increasing order, or None when some component is not rooted
    """
    digraph = graph.to_networkx()
    result = []
    for component in nx.weakly_connected_components(digraph):
        if len(component) < 2:
            continue
        root = _rooted_in(digraph.subgraph(component))
        if root is None:
            return None
        result.append(root)
    return sorted(result) if result else None


def path_order(graph: WeightedOrientedGraph) -> Optional[Tuple[int, ...]]:
    """
    Vertex sequence of a graph whose underlying graph is a path, starting from the end with
    the smaller label.

    :param graph: graph to inspect
    :return: ordered vertices or None
    """
    if graph.n < 2 or len(graph.edges) != graph.n - 1:
        return None
    undirected = graph.to_networkx().to_undirected()
    if not nx.is_connected(undirected) or max(d for _, d in undirected.degree) > 2:
        return None
    ends = sorted(v for v, d in undirected.degree if d == 1)
    return tuple(nx.shortest_path(undirected, ends[0], ends[1]))


def path_tail(graph: WeightedOrientedGraph) -> Optional[Tuple[int, int, int]]:
    """
    For a path with at least three vertices, an end t together with its neighbor s and the
    next vertex r such that r -> s -> t. The end with the larger label is preferred.

    :param graph: graph to inspect
    :return: (r, s, t) or None when neither end is reached by two consecutive forward edges
    """
    order = path_order(graph)
    if order is None or len(order) < 3:
        return None
    edges = set(graph.edges)
    candidates = []
    for sequence in (order, tuple(reversed(order))):
        r, s, t = sequence[-3], sequence[-2], sequence[-1]
        if (r, s) in edges and (s, t) in edges:
            candidates.append((r, s, t))
    if not candidates:
        return None
    return max(candidates, key=lambda triple: triple[2])
