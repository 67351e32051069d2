"""
betti-utilities - ideal/__init__.py

Licensed under the MIT License.
"""
from betti_utils.ideal.monomial_ideal import (
    CapExceededError,
    Monomial,
    MonomialIdeal,
    colon_by_monomial,
    divides,
    edge_ideal,
    lcm,
    lcm_closure,
    minimalize,
)

__all__ = [
    "CapExceededError",
    "Monomial",
    "MonomialIdeal",
    "colon_by_monomial",
    "divides",
    "edge_ideal",
    "lcm",
    "lcm_closure",
    "minimalize",
]
