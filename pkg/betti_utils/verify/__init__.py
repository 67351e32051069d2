"""
betti-utilities - verify/__init__.py

Licensed under the MIT License.
"""
from betti_utils.verify.checks import (
    ALL_CHECKS,
    check_betti_splitting,
    check_closed_formulas,
    check_complete_sink,
    check_induced_monotonicity,
    check_mapping_cone,
    check_weight_reduction,
    verify_graph,
)
from betti_utils.verify.taylor import oracle_compare, taylor_betti
from betti_utils.verify.verification_report import CheckStatus, VerificationReport, dump_report

__all__ = [
    "ALL_CHECKS",
    "CheckStatus",
    "VerificationReport",
    "check_betti_splitting",
    "check_closed_formulas",
    "check_complete_sink",
    "check_induced_monotonicity",
    "check_mapping_cone",
    "check_weight_reduction",
    "dump_report",
    "oracle_compare",
    "taylor_betti",
    "verify_graph",
]
