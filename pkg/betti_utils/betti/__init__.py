"""
betti-utilities - betti/__init__.py

Licensed under the MIT License.
"""
from betti_utils.betti.betti_table import (
    AlgebraicInvariants,
    BettiTable,
    Convention,
    graded_view,
    invariants_of,
    lift,
    render_diagram,
    to_quotient,
    total_view,
)
from betti_utils.betti.upper_koszul import multigraded_betti, quotient_betti, upper_koszul

__all__ = [
    "AlgebraicInvariants",
    "BettiTable",
    "Convention",
    "graded_view",
    "invariants_of",
    "lift",
    "multigraded_betti",
    "quotient_betti",
    "render_diagram",
    "to_quotient",
    "total_view",
    "upper_koszul",
]
