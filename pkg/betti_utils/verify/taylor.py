"""
betti-utilities - verify/taylor.py

Betti numbers from the Taylor complex, sharing nothing with the upper-Koszul engine except the
GF(p) rank kernel.

Licensed under the MIT License.
"""
import logging
from typing import Dict, List, Optional

import numpy as np

from betti_utils.betti.betti_table import (
    BettiTable,
    Convention,
    empty_quotient_table,
    total_view,
)
from betti_utils.betti.upper_koszul import quotient_betti
from betti_utils.homology.field_linear_algebra import FieldSpec, rank_mod_p
from betti_utils.ideal.monomial_ideal import DEFAULT_LCM_CAP, CapExceededError, MonomialIdeal
from betti_utils.verify.verification_report import VerificationReport, compare_tables

DEFAULT_TAYLOR_CAP = 20


def _lcm_of_every_subset(generators: np.ndarray) -> np.ndarray:
    """ Row mask holds the lcm of the generators whose bits are set in mask """
    count, n = generators.shape
    table = np.zeros((1 << count, n), dtype=np.int64)
    for k in range(count):
        table[1 << k: 1 << (k + 1)] = np.maximum(table[: 1 << k], generators[k])
    return table


def _strand_betti(masks: List[int], inside: set, p: int) -> Dict[int, int]:
    """
    Homology of one multidegree strand. Basis in degree k: subsets of size k with the strand's
    lcm; removing the generator at position pos of a subset carries the sign (-1)^pos and only
    survives when the smaller subset keeps the lcm.
    """
    by_size: Dict[int, List[int]] = {}
    for mask in masks:
        by_size.setdefault(bin(mask).count("1"), []).append(mask)
    index = {k: {mask: i for i, mask in enumerate(sorted(group))} for k, group in by_size.items()}

    ranks = {}
    for k, group in by_size.items():
        if k == 0 or k - 1 not in index:
            continue
        matrix = np.zeros((len(index[k - 1]), len(group)), dtype=np.int64)
        for column, mask in enumerate(sorted(group)):
            bits = [b for b in range(mask.bit_length()) if mask >> b & 1]
            for position, bit in enumerate(bits):
                face = mask ^ (1 << bit)
                if face in inside:
                    matrix[index[k - 1][face], column] = 1 if position % 2 == 0 else p - 1
        ranks[k] = rank_mod_p(matrix, p)

    result = {}
    for k, group in by_size.items():
        value = len(group) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if value:
            result[k] = value
    return result


def taylor_betti(
    ideal: MonomialIdeal,
    field: Optional[FieldSpec] = None,
    cap: int = DEFAULT_TAYLOR_CAP,
    force: bool = False,
) -> BettiTable:
    """
    Betti table of R/I from the multidegree strands of the Taylor complex tensored with GF(p).

    :param ideal: non unit monomial ideal
    :param field: coefficient field, default GF(32003)
    :param cap: largest generator count accepted without force
    :param force: ignore the cap
    :return: QUOTIENT convention :class:`BettiTable`
    """
    field = field or FieldSpec()
    if ideal.is_unit:
        raise ValueError("Betti numbers of the unit ideal are not defined here")
    if ideal.is_zero:
        return empty_quotient_table(ideal.ambient_n)
    if len(ideal) > cap and not force:
        raise CapExceededError("The Taylor complex", len(ideal), cap)

    generators = np.array(ideal.generators, dtype=np.int64)
    lcms = _lcm_of_every_subset(generators)
    multidegrees, strand_of_mask = np.unique(lcms, axis=0, return_inverse=True)
    strand_of_mask = np.asarray(strand_of_mask).reshape(-1)
    order = np.argsort(strand_of_mask, kind="stable")
    boundaries = np.searchsorted(strand_of_mask[order], np.arange(len(multidegrees) + 1))
    logging.getLogger(__name__).debug(
        "Taylor complex of %s: %d subsets in %d strands", ideal, len(lcms), len(multidegrees)
    )

    entries = {}
    for strand, b in enumerate(multidegrees):
        masks = [int(m) for m in order[boundaries[strand]: boundaries[strand + 1]]]
        inside = set(masks)
        for k, value in _strand_betti(masks, inside, field.p).items():
            entries[(k, tuple(int(e) for e in b))] = value
    return BettiTable(Convention.quotient, ideal.ambient_n, entries)


def oracle_compare(
    ideal: MonomialIdeal,
    field: Optional[FieldSpec] = None,
    lcm_cap: int = DEFAULT_LCM_CAP,
    taylor_cap: int = DEFAULT_TAYLOR_CAP,
    force: bool = False,
) -> VerificationReport:
    """
    Compare the upper-Koszul table of R/I with the Taylor complex table entry by entry.

    :param ideal: non unit monomial ideal
    :param field: coefficient field
    :param lcm_cap: cap of the upper-Koszul engine
    :param taylor_cap: cap of the Taylor engine
    :param force: ignore both caps
    :return: :class:`VerificationReport` with the oracle check and the total Betti numbers
    """
    field = field or FieldSpec()
    koszul = quotient_betti(ideal, field, cap=lcm_cap, force=force)
    taylor = taylor_betti(ideal, field, cap=taylor_cap, force=force)
    checks = (
        compare_tables("oracle", taylor.entries, koszul.entries),
        compare_tables("oracle.totals", total_view(taylor), total_view(koszul)),
    )
    return VerificationReport(str(ideal), field.p, checks)
