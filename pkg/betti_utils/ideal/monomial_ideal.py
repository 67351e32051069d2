"""
betti-utilities - ideal/monomial_ideal.py

Licensed under the MIT License.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from betti_utils.graph.weighted_oriented_graph import WeightedOrientedGraph

# Exponent vector b of the monomial x^b.
Monomial = Tuple[int, ...]

DEFAULT_LCM_CAP = 18


class CapExceededError(ValueError):
    """ Generator count above a configured enumeration cap """

    def __init__(self, what: str, generators: int, cap: int):
        self.generators = generators
        self.cap = cap
        super().__init__(
            "{} needs up to 2^{} = {} subsets for {} generators, above the cap of {}; "
            "raise the cap or force the computation".format(
                what, generators, 2 ** generators, generators, cap
            )
        )


def monomial(*exponents: int) -> Monomial:
    return tuple(int(e) for e in exponents)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def degree(m: Monomial) -> int:
    return sum(m)


def support(m: Monomial) -> List[int]:
    """ 1-based indices of the variables dividing m """
    return [i + 1 for i, e in enumerate(m) if e > 0]


def format_monomial(m: Monomial) -> str:
    factors = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            factors.append("x{}".format(i))
        elif e > 1:
            factors.append("x{}^{}".format(i, e))
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Monomial ideal given by its minimal generators in increasing lexicographic order. The zero
    ideal has no generators and the unit ideal has the single generator 1.
    """

    ambient_n: int
    generators: Tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(degree(g) == 0 for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.generators) + ")"


def minimalize(monomials: Iterable[Sequence[int]], ambient_n: Optional[int] = None) -> MonomialIdeal:
    """
    Minimal generating set of the ideal spanned by monomials.

    :param monomials: exponent vectors, all of one length
    :param ambient_n: variable count, needed when monomials is empty
    :return: :class:`MonomialIdeal`
    """
    candidates = sorted({tuple(int(e) for e in m) for m in monomials})
    if ambient_n is None:
        if not candidates:
            raise ValueError("ambient_n is required for an empty generator list")
        ambient_n = len(candidates[0])
    if any(len(m) != ambient_n for m in candidates):
        raise ValueError("Monomials must all have {} exponents".format(ambient_n))

    # Sorting by degree first means a divisor is always seen before its multiples.
    kept: List[Monomial] = []
    for m in sorted(candidates, key=lambda x: (degree(x), x)):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return MonomialIdeal(ambient_n, tuple(sorted(kept)))


def edge_ideal(graph: WeightedOrientedGraph) -> MonomialIdeal:
    """
    Edge ideal generated by x_u * x_v^{w_v} for each edge u -> v.

    :param graph: weighted oriented graph
    :return: :class:`MonomialIdeal` over graph.n variables
    """
    generators = []
    for u, v in graph.edges:
        exponents = [0] * graph.n
        exponents[u - 1] = 1
        exponents[v - 1] = graph.weight(v)
        generators.append(tuple(exponents))
    ideal = minimalize(generators, graph.n)
    if len(ideal) != len(generators):
        logging.getLogger(__name__).warning(
            "Edge ideal of %s has %d minimal generators for %d edges",
            graph.describe(),
            len(ideal),
            len(generators),
        )
    return ideal


def colon_by_monomial(ideal: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """
    Colon ideal I : m, generated by lcm(g, m) / m over the generators g of I.

    :param ideal: monomial ideal
    :param m: monomial exponent vector
    :return: :class:`MonomialIdeal`
    """
    m = tuple(m)
    if len(m) != ideal.ambient_n:
        raise ValueError("Monomial has {} exponents, ideal has {} variables".format(len(m), ideal.ambient_n))
    quotients = [tuple(max(g_i - m_i, 0) for g_i, m_i in zip(g, m)) for g in ideal.generators]
    return minimalize(quotients, ideal.ambient_n)


def intersection(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """ Intersection of monomial ideals, generated by pairwise lcms """
    return minimalize(
        [lcm(a, b) for a in first.generators for b in second.generators], first.ambient_n
    )


def extend_ring(ideal: MonomialIdeal, label_map, ambient_n: int) -> MonomialIdeal:
    """
    Rewrite an ideal on relabeled variables in a larger ring.

    :param ideal: ideal over len(label_map) variables
    :param label_map: parent variable -> variable of ideal
    :param ambient_n: variable count of the parent ring
    :return: :class:`MonomialIdeal`
    """
    generators = []
    for g in ideal.generators:
        exponents = [0] * ambient_n
        for old, new in label_map.items():
            exponents[old - 1] = g[new - 1]
        generators.append(tuple(exponents))
    return minimalize(generators, ambient_n)


def lcm_closure(
    ideal: MonomialIdeal, cap: int = DEFAULT_LCM_CAP, force: bool = False
) -> List[Monomial]:
    """
    The lcm lattice minus its bottom: generators closed under pairwise lcm, computed as a join
    fixpoint.

    :param ideal: monomial ideal
    :param cap: largest generator count accepted without force
    :param force: ignore the cap
    :return: multidegrees in lexicographic order
    """
    if len(ideal) > cap and not force:
        raise CapExceededError("The lcm lattice", len(ideal), cap)

    closure = set(ideal.generators)
    frontier = set(ideal.generators)
    while frontier:
        joins = {lcm(a, g) for a in frontier for g in ideal.generators}
        frontier = joins - closure
        closure |= frontier
    return sorted(closure)


def random_monomial_ideal(
    rng: np.random.Generator, n_vars: int = 5, max_generators: int = 6, max_exponent: int = 3
) -> MonomialIdeal:
    """
    Random non zero, non unit monomial ideal.

    :param rng: numpy random generator
    :param n_vars: variable count
    :param max_generators: generators drawn before minimalization
    :param max_exponent: largest exponent drawn
    :return: :class:`MonomialIdeal`
    """
    count = int(rng.integers(1, max_generators + 1))
    drawn = []
    while len(drawn) < count:
        exponents = tuple(int(e) for e in rng.integers(0, max_exponent + 1, size=n_vars))
        if degree(exponents) > 0:
            drawn.append(exponents)
    return minimalize(drawn, n_vars)
