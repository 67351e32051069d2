"""
betti-utilities - homology/simplicial_complex.py

Licensed under the MIT License.
"""
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from betti_utils.homology.field_linear_algebra import FieldSpec, rank_mod_p

Face = Tuple[int, ...]


class ComplexKind(Enum):
    """ VOID has no faces, IRRELEVANT has only the empty face """

    void = "VOID"
    irrelevant = "IRRELEVANT"
    ordinary = "ORDINARY"


@dataclass(frozen=True)
class SimplicialComplex:
    universe: Tuple[int, ...]
    facets: Tuple[Face, ...]
    kind: ComplexKind

    @property
    def dimension(self) -> int:
        """ -1 for IRRELEVANT, -2 for VOID """
        if self.kind == ComplexKind.void:
            return -2
        return max(len(f) for f in self.facets) - 1


VOID_FACETS: Tuple[Face, ...] = ()


def complex_from_faces(universe: Iterable[int], faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """
    Simplicial complex generated by faces. Input faces need not be closed under subsets.

    :param universe: vertex labels
    :param faces: vertex sets
    :return: :class:`SimplicialComplex`
    """
    universe = tuple(sorted(set(universe)))
    allowed = set(universe)
    distinct = set()
    for face in faces:
        face = tuple(sorted(set(face)))
        if not set(face) <= allowed:
            raise ValueError("Face {} is not contained in the universe {}".format(face, universe))
        distinct.add(face)

    if not distinct:
        return SimplicialComplex(universe, VOID_FACETS, ComplexKind.void)

    by_size = sorted(distinct, key=len, reverse=True)
    facets: List[Face] = []
    for face in by_size:
        if not any(set(face) <= set(f) for f in facets):
            facets.append(face)
    facets.sort()
    if facets == [()]:
        return SimplicialComplex(universe, ((),), ComplexKind.irrelevant)
    return SimplicialComplex(universe, tuple(facets), ComplexKind.ordinary)


@lru_cache(maxsize=4096)
def faces_of_dim(complex_: SimplicialComplex, d: int) -> Tuple[Face, ...]:
    """
    Faces with d+1 vertices in lexicographic order.

    :param complex_: simplicial complex
    :param d: dimension, at least -1
    :return: faces
    """
    if complex_.kind == ComplexKind.void or d < -1:
        return ()
    faces = set()
    for facet in complex_.facets:
        faces.update(combinations(facet, d + 1))
    return tuple(sorted(faces))


def boundary_matrix(complex_: SimplicialComplex, d: int, field: FieldSpec) -> np.ndarray:
    """
    Reduced boundary map from d-faces to (d-1)-faces. Removing the vertex at position k of a
    sorted face carries the sign (-1)^k; d = 0 is the augmentation onto the empty face.

    :param complex_: simplicial complex
    :param d: dimension of the source faces, at least 0
    :param field: coefficient field
    :return: int64 matrix with entries in 0..p-1
    """
    rows = faces_of_dim(complex_, d - 1)
    columns = faces_of_dim(complex_, d)
    row_index = {face: i for i, face in enumerate(rows)}
    matrix = np.zeros((len(rows), len(columns)), dtype=np.int64)
    for j, face in enumerate(columns):
        for k in range(len(face)):
            matrix[row_index[face[:k] + face[k + 1:]], j] = 1 if k % 2 == 0 else field.p - 1
    return matrix


def reduced_homology_dims(complex_: SimplicialComplex, field: FieldSpec) -> Dict[int, int]:
    """
    Dimensions of the reduced homology groups over GF(p).

    :param complex_: simplicial complex
    :param field: coefficient field
    :return: dimension d -> dim H~_d, non zero entries only
    """
    if complex_.kind == ComplexKind.void:
        return {}
    top = complex_.dimension
    ranks = {d: rank_mod_p(boundary_matrix(complex_, d, field), field.p) for d in range(0, top + 1)}
    result = {}
    for d in range(-1, top + 1):
        value = len(faces_of_dim(complex_, d)) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if value:
            result[d] = value
    return result


def cone_apex(complex_: SimplicialComplex) -> Optional[int]:
    """
    Smallest vertex lying in every facet.

    :param complex_: complex that is neither VOID nor IRRELEVANT
    :return: apex or None
    """
    if complex_.kind != ComplexKind.ordinary:
        raise ValueError("cone_apex is undefined on the {} complex".format(complex_.kind.value))
    common = set(complex_.facets[0]).intersection(*complex_.facets[1:])
    return min(common) if common else None


def f_vector(complex_: SimplicialComplex) -> List[int]:
    """ Face counts f_{-1}, f_0, ..., f_dim """
    return [len(faces_of_dim(complex_, d)) for d in range(-1, complex_.dimension + 1)]


def reduced_euler_characteristic(complex_: SimplicialComplex) -> int:
    # f_vector starts at dimension -1, so index k holds dimension k - 1.
    return sum((-1) ** (k + 1) * f for k, f in enumerate(f_vector(complex_)))
