"""
betti-utilities - homology/__init__.py

Licensed under the MIT License.
"""
from betti_utils.homology.field_linear_algebra import FieldSpec, rank_mod_p
from betti_utils.homology.simplicial_complex import (
    ComplexKind,
    SimplicialComplex,
    boundary_matrix,
    complex_from_faces,
    cone_apex,
    faces_of_dim,
    reduced_homology_dims,
)

__all__ = [
    "ComplexKind",
    "FieldSpec",
    "SimplicialComplex",
    "boundary_matrix",
    "complex_from_faces",
    "cone_apex",
    "faces_of_dim",
    "rank_mod_p",
    "reduced_homology_dims",
]
