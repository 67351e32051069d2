"""
betti-utilities - graph/weighted_oriented_graph.py

Licensed under the MIT License.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

Edge = Tuple[int, int]


class GraphError(ValueError):
    """ Malformed graph input or an operation whose precondition fails """


@dataclass(frozen=True)
class VertexRole:
    is_source: bool
    is_sink: bool
    is_leaf: bool
    is_trivial: bool


@dataclass(frozen=True)
class WeightedOrientedGraph:
    """
    Vertex weighted oriented graph on vertices 1..n. Vertex v corresponds to the variable x_v of
    the polynomial ring of its edge ideal.

    Instances are built through build_graph, induced_subgraph or weight_reduce, which enforce:
    no loops, at most one orientation per vertex pair, positive weights and weight 1 on every
    source vertex.
    """

    n: int
    edges: Tuple[Edge, ...]
    weights: Tuple[int, ...]
    notes: Tuple[str, ...] = field(default=(), compare=False)
    label_map: Optional[Mapping[int, int]] = field(default=None, compare=False)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def weight(self, v: int) -> int:
        return self.weights[v - 1]

    @cached_property
    def _adjacency(self) -> Tuple[Dict[int, List[int]], Dict[int, List[int]]]:
        incoming = {v: [] for v in self.vertices}
        outgoing = {v: [] for v in self.vertices}
        for u, v in self.edges:
            outgoing[u].append(v)
            incoming[v].append(u)
        return incoming, outgoing

    def in_neighbors(self, v: int) -> List[int]:
        return list(self._adjacency[0][v])

    def out_neighbors(self, v: int) -> List[int]:
        return list(self._adjacency[1][v])

    def degree(self, v: int) -> int:
        return len(self._adjacency[0][v]) + len(self._adjacency[1][v])

    def total_weight(self) -> int:
        return sum(self.weights)

    def to_networkx(self) -> nx.DiGraph:
        """
        Directed networkx view with a ``weight`` node attribute

        :return: :class:`networkx.DiGraph`
        """
        graph = nx.DiGraph()
        for v in self.vertices:
            graph.add_node(v, weight=self.weight(v))
        graph.add_edges_from(self.edges)
        return graph

    def describe(self) -> str:
        edges = " ".join("{}->{}".format(u, v) for u, v in self.edges)
        weights = ",".join(str(w) for w in self.weights)
        return "n={} edges=[{}] w=({})".format(self.n, edges, weights)


def _normalized(
    n: int,
    edges: Iterable[Edge],
    weights: List[int],
    notes: Tuple[str, ...] = (),
    label_map: Optional[Mapping[int, int]] = None,
) -> WeightedOrientedGraph:
    edges = tuple(sorted(set(edges)))
    heads = {v for _, v in edges}
    weights = list(weights)
    new_notes = list(notes)
    for v in range(1, n + 1):
        if v not in heads and weights[v - 1] != 1:
            new_notes.append(
                "weight {} of source vertex {} normalized to 1".format(weights[v - 1], v)
            )
            weights[v - 1] = 1
    if len(new_notes) > len(notes):
        logging.getLogger(__name__).debug("; ".join(new_notes[len(notes):]))
    return WeightedOrientedGraph(n, edges, tuple(weights), tuple(new_notes), label_map)


def build_graph(
    n: int, edges: Iterable[Edge], weights: Optional[Mapping[int, int]] = None
) -> WeightedOrientedGraph:
    """
    Build a weighted oriented graph. Unspecified weights default to 1, duplicate edges are
    dropped and source vertex weights are normalized to 1 with a recorded note.

    :param n: vertex count
    :param edges: ordered pairs (u, v) meaning u -> v
    :param weights: partial map vertex -> positive weight
    :return: :class:`WeightedOrientedGraph`
    :raises GraphError: loops, anti-parallel pairs, non-positive weights, out of range vertices
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise GraphError("Vertex count must be a positive integer, got {!r}".format(n))

    edge_set = set()
    for edge in edges:
        u, v = (int(x) for x in edge)
        for vertex in (u, v):
            if not 1 <= vertex <= n:
                raise GraphError("Vertex {} out of range 1..{}".format(vertex, n))
        if u == v:
            raise GraphError("Loop at vertex {} is not allowed".format(u))
        if (v, u) in edge_set:
            raise GraphError("Edges {}->{} and {}->{} are anti-parallel".format(u, v, v, u))
        edge_set.add((u, v))

    full_weights = [1] * n
    for v, w in (weights or {}).items():
        if not 1 <= v <= n:
            raise GraphError("Weight given for vertex {} out of range 1..{}".format(v, n))
        if isinstance(w, bool) or not isinstance(w, int) or w < 1:
            raise GraphError("Weight of vertex {} must be a positive integer, got {!r}".format(v, w))
        full_weights[v - 1] = w

    return _normalized(n, edge_set, full_weights)


def roles(graph: WeightedOrientedGraph) -> Dict[int, VertexRole]:
    """
    Source, sink, leaf and trivial flags per vertex. Isolated vertices count as sources.

    :param graph: graph to inspect
    :return: vertex -> :class:`VertexRole`
    """
    result = {}
    for v in graph.vertices:
        in_degree = len(graph.in_neighbors(v))
        out_degree = len(graph.out_neighbors(v))
        result[v] = VertexRole(
            is_source=in_degree == 0,
            is_sink=out_degree == 0 and in_degree >= 1,
            is_leaf=in_degree + out_degree == 1,
            is_trivial=graph.weight(v) == 1,
        )
    return result


def induced_subgraph(graph: WeightedOrientedGraph, subset: Iterable[int]) -> WeightedOrientedGraph:
    """
    Induced subgraph on subset, relabeled 1..|subset| in increasing order. The label_map of the
    result maps old labels to new ones. Vertices that become sources are renormalized.

    :param graph: parent graph
    :param subset: non empty vertex subset
    :return: :class:`WeightedOrientedGraph`
    """
    kept = sorted(set(subset))
    if not kept:
        raise GraphError("Induced subgraph needs a non empty vertex subset")
    for v in kept:
        if not 1 <= v <= graph.n:
            raise GraphError("Vertex {} out of range 1..{}".format(v, graph.n))

    label_map = {old: new for new, old in enumerate(kept, start=1)}
    edges = [
        (label_map[u], label_map[v])
        for u, v in graph.edges
        if u in label_map and v in label_map
    ]
    weights = [graph.weight(v) for v in kept]
    return _normalized(len(kept), edges, weights, label_map=label_map)


def delete_vertices(graph: WeightedOrientedGraph, removed: Iterable[int]) -> WeightedOrientedGraph:
    """ D minus the given vertices, see induced_subgraph """
    removed = set(removed)
    return induced_subgraph(graph, [v for v in graph.vertices if v not in removed])


def weight_reduce(graph: WeightedOrientedGraph, v: int) -> WeightedOrientedGraph:
    """
    Weight reduced form of graph on v: same edges, w_v decreased by one.

    :param graph: graph to reduce
    :param v: non trivial vertex
    :return: :class:`WeightedOrientedGraph`
    :raises GraphError: when v is out of range or trivial
    """
    if not 1 <= v <= graph.n:
        raise GraphError("Vertex {} out of range 1..{}".format(v, graph.n))
    if graph.weight(v) < 2:
        raise GraphError("Vertex {} is trivial and cannot be weight reduced".format(v))
    weights = list(graph.weights)
    weights[v - 1] -= 1
    return WeightedOrientedGraph(graph.n, graph.edges, tuple(weights))


def underlying_graph(graph: WeightedOrientedGraph) -> WeightedOrientedGraph:
    """ Same edges with every weight set to 1 """
    return WeightedOrientedGraph(graph.n, graph.edges, (1,) * graph.n)


def has_full_pdim_structure(graph: WeightedOrientedGraph) -> bool:
    """
    True when every vertex has an incoming edge from a non trivial vertex.

    :param graph: graph to inspect
    :return: `bool`
    """
    return all(
        any(graph.weight(u) >= 2 for u in graph.in_neighbors(v)) for v in graph.vertices
    )
