"""
betti-utilities - graph/__init__.py

Licensed under the MIT License.
"""
from betti_utils.graph.families import FamilyKind, attach_leaf_sink, family, random_graph
from betti_utils.graph.weighted_oriented_graph import (
    GraphError,
    VertexRole,
    WeightedOrientedGraph,
    build_graph,
    delete_vertices,
    has_full_pdim_structure,
    induced_subgraph,
    roles,
    weight_reduce,
)

__all__ = [
    "FamilyKind",
    "GraphError",
    "VertexRole",
    "WeightedOrientedGraph",
    "attach_leaf_sink",
    "build_graph",
    "delete_vertices",
    "family",
    "has_full_pdim_structure",
    "induced_subgraph",
    "random_graph",
    "roles",
    "weight_reduce",
]
