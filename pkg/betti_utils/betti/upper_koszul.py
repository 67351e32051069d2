"""
betti-utilities - betti/upper_koszul.py

Licensed under the MIT License.
"""
import logging
from itertools import combinations
from typing import Dict, Optional

from joblib import Parallel, delayed
from toolz import merge

from betti_utils.betti.betti_table import BettiTable, Convention, Key, to_quotient
from betti_utils.homology.field_linear_algebra import FieldSpec
from betti_utils.homology.simplicial_complex import (
    SimplicialComplex,
    complex_from_faces,
    reduced_homology_dims,
)
from betti_utils.ideal.monomial_ideal import (
    DEFAULT_LCM_CAP,
    Monomial,
    MonomialIdeal,
    lcm_closure,
    support,
)


def _require_proper(ideal: MonomialIdeal):
    if ideal.is_unit:
        raise ValueError("Betti numbers of the unit ideal are not defined here")


def upper_koszul(ideal: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    """
    Upper-Koszul simplicial complex of ideal at b: subsets F of the support of b such that
    x^b / x^F lies in the ideal.

    :param ideal: non unit monomial ideal
    :param b: multidegree
    :return: :class:`SimplicialComplex`, VOID when x^b is not in the ideal
    """
    _require_proper(ideal)
    b = tuple(b)
    universe = support(b)
    faces = []
    if ideal.contains(b):
        for size in range(len(universe) + 1):
            found = False
            for face in combinations(universe, size):
                quotient = list(b)
                for v in face:
                    quotient[v - 1] -= 1
                if ideal.contains(quotient):
                    faces.append(face)
                    found = True
            # Faces are closed under subsets, so an empty layer ends the search.
            if not found:
                break
    return complex_from_faces(universe, faces)


def betti_at(ideal: MonomialIdeal, b: Monomial, field: FieldSpec) -> Dict[Key, int]:
    """ beta_{i,b}(I) = dim H~_{i-1}(K^b(I)) for every i """
    homology = reduced_homology_dims(upper_koszul(ideal, b), field)
    return {(d + 1, tuple(b)): value for d, value in homology.items()}


def multigraded_betti(
    ideal: MonomialIdeal,
    field: Optional[FieldSpec] = None,
    cap: int = DEFAULT_LCM_CAP,
    force: bool = False,
    n_jobs: int = 1,
) -> BettiTable:
    """
    Multigraded Betti table of the ideal from upper-Koszul homology at every lcm lattice
    multidegree.

    :param ideal: non unit monomial ideal; the zero ideal yields an empty table
    :param field: coefficient field, default GF(32003)
    :param cap: lcm lattice generator cap
    :param force: ignore the cap
    :param n_jobs: joblib worker count
    :return: IDEAL convention :class:`BettiTable`
    """
    _require_proper(ideal)
    field = field or FieldSpec()
    if ideal.is_zero:
        return BettiTable(Convention.ideal, ideal.ambient_n, {})

    multidegrees = lcm_closure(ideal, cap, force)
    logging.getLogger(__name__).debug(
        "Computing %d multidegrees of %s over GF(%d)", len(multidegrees), ideal, field.p
    )
    if n_jobs == 1:
        parts = [betti_at(ideal, b, field) for b in multidegrees]
    else:
        parts = Parallel(n_jobs=n_jobs)(delayed(betti_at)(ideal, b, field) for b in multidegrees)
    return BettiTable(Convention.ideal, ideal.ambient_n, merge(parts) if parts else {})


def quotient_betti(ideal: MonomialIdeal, field: Optional[FieldSpec] = None, **kwargs) -> BettiTable:
    """ QUOTIENT convention table of R/I, see multigraded_betti """
    return to_quotient(multigraded_betti(ideal, field, **kwargs))
