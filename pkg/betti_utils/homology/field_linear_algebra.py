"""
betti-utilities - homology/field_linear_algebra.py

Licensed under the MIT License.
"""
from dataclasses import dataclass

import numpy as np
from sympy import isprime

DEFAULT_PRIME = 32003

# Products of two reduced entries must fit in int64.
MAX_PRIME = 2 ** 31


@dataclass(frozen=True)
class FieldSpec:
    """ Coefficient field GF(p) """

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int) or not isprime(self.p):
            raise ValueError("Field modulus must be a prime, got {!r}".format(self.p))
        if self.p >= MAX_PRIME:
            raise ValueError("Field modulus must be below 2^31, got {}".format(self.p))


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """
    Rank over GF(p) by Gaussian elimination with a column scan for pivots.

    :param matrix: integer matrix, any shape including empty
    :param p: prime modulus
    :return: rank
    """
    reduced = np.array(matrix, dtype=np.int64) % p
    if reduced.ndim != 2:
        raise ValueError("Expected a 2 dimensional matrix, got shape {}".format(reduced.shape))
    rows, columns = reduced.shape
    rank = 0
    for c in range(columns):
        if rank == rows:
            break
        candidates = np.nonzero(reduced[rank:, c])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            reduced[[rank, pivot], :] = reduced[[pivot, rank], :]
        inverse = pow(int(reduced[rank, c]), -1, p)
        reduced[rank, :] = (reduced[rank, :] * inverse) % p
        below = reduced[rank + 1:, c].copy()
        if below.any():
            reduced[rank + 1:, :] = (
                reduced[rank + 1:, :] - np.outer(below, reduced[rank, :])
            ) % p
        rank += 1
    return rank
