"""
betti-utilities - cli/enumeration.py

Weighted oriented graphs up to isomorphism. Skeletons (oriented graphs without weights) are grown
one vertex at a time from canonical representatives and canonicalized by trying every labeling
that respects a degree signature; weights are then assigned to non source vertices and
deduplicated under the automorphism group of the skeleton.

Licensed under the MIT License.
"""
from itertools import permutations, product
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from betti_utils.graph.weighted_oriented_graph import WeightedOrientedGraph, build_graph

Skeleton = Tuple[Tuple[int, int], ...]
Permutation = Tuple[int, ...]


def _signatures(n: int, edges: Sequence[Tuple[int, int]]) -> List[tuple]:
    incoming: Dict[int, List[int]] = {v: [] for v in range(n)}
    outgoing: Dict[int, List[int]] = {v: [] for v in range(n)}
    for u, v in edges:
        outgoing[u].append(v)
        incoming[v].append(u)
    base = [(len(incoming[v]), len(outgoing[v])) for v in range(n)]
    return [
        (base[v], tuple(sorted(base[u] for u in incoming[v])), tuple(sorted(base[u] for u in outgoing[v])))
        for v in range(n)
    ]


def _labelings(n: int, edges: Sequence[Tuple[int, int]]) -> Iterator[Permutation]:
    """ Every labeling old -> new that sorts vertices by signature """
    signatures = _signatures(n, edges)
    classes: Dict[tuple, List[int]] = {}
    for v in range(n):
        classes.setdefault(signatures[v], []).append(v)
    ordered = [classes[s] for s in sorted(classes)]
    for choice in product(*(permutations(group) for group in ordered)):
        labeling = [0] * n
        position = 0
        for group in choice:
            for v in group:
                labeling[v] = position
                position += 1
        yield tuple(labeling)


def _relabel(edges: Sequence[Tuple[int, int]], labeling: Permutation) -> Skeleton:
    return tuple(sorted((labeling[u], labeling[v]) for u, v in edges))


def canonical_skeleton(n: int, edges: Sequence[Tuple[int, int]]) -> Skeleton:
    """
    Lexicographically smallest relabeling among signature respecting labelings, vertices 0..n-1.

    :param n: vertex count
    :param edges: oriented edges on 0..n-1
    :return: canonical edge tuple
    """
    return min(_relabel(edges, labeling) for labeling in _labelings(n, edges))


def automorphisms(n: int, skeleton: Skeleton) -> List[Permutation]:
    """ Permutations of 0..n-1 fixing the skeleton """
    return [labeling for labeling in _labelings(n, skeleton) if _relabel(skeleton, labeling) == skeleton]


def skeletons(max_n: int) -> Dict[int, List[Skeleton]]:
    """
    Canonical oriented graphs on 1..max_n vertices, edgeless ones included.

    :param max_n: largest vertex count
    :return: n -> canonical skeletons on vertices 0..n-1 in sorted order
    """
    result: Dict[int, List[Skeleton]] = {1: [()]}
    for n in range(2, max_n + 1):
        found: set = set()
        new = n - 1
        for skeleton in result[n - 1]:
            for pattern in product((0, 1, 2), repeat=n - 1):
                edges = list(skeleton)
                for u, link in enumerate(pattern):
                    if link == 1:
                        edges.append((u, new))
                    elif link == 2:
                        edges.append((new, u))
                found.add(canonical_skeleton(n, edges))
        result[n] = sorted(found)
    return result


def weightings(n: int, skeleton: Skeleton, max_weight: int, group: Sequence[Permutation]) -> Iterator[Tuple[int, ...]]:
    """
    Weight vectors with weight 1 on sources and 1..max_weight elsewhere, one per orbit of the
    automorphism group.
    """
    heads: FrozenSet[int] = frozenset(v for _, v in skeleton)
    ranges = [range(1, max_weight + 1) if v in heads else (1,) for v in range(n)]
    for weights in product(*ranges):
        smallest = weights
        for labeling in group:
            moved = [0] * n
            for v in range(n):
                moved[labeling[v]] = weights[v]
            smallest = min(smallest, tuple(moved))
        if smallest == weights:
            yield weights


def enumerate_graphs(max_n: int, max_weight: int, min_n: int = 2) -> Iterator[WeightedOrientedGraph]:
    """
    Every weighted oriented graph with at least one edge, min_n..max_n vertices and weights at
    most max_weight, one per isomorphism class.

    :param max_n: largest vertex count
    :param max_weight: largest weight
    :param min_n: smallest vertex count
    :return: iterator of :class:`WeightedOrientedGraph`
    """
    by_size = skeletons(max_n)
    for n in range(max(min_n, 2), max_n + 1):
        for skeleton in by_size[n]:
            if not skeleton:
                continue
            group = automorphisms(n, skeleton)
            edges = [(u + 1, v + 1) for u, v in skeleton]
            for weights in weightings(n, skeleton, max_weight, group):
                yield build_graph(n, edges, {v: w for v, w in enumerate(weights, start=1)})
