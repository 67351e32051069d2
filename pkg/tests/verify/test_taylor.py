"""
betti-utilities - tests/verify/test_taylor.py

Licensed under the MIT License.
"""
import numpy as np
import pytest

from betti_utils.betti.upper_koszul import quotient_betti
from betti_utils.homology.field_linear_algebra import FieldSpec
from betti_utils.ideal.monomial_ideal import CapExceededError, edge_ideal, minimalize, random_monomial_ideal
from betti_utils.verify.taylor import oracle_compare, taylor_betti
from betti_utils.verify.verification_report import CheckStatus


def test_taylor_matches_example(example_graph, field):
    ideal = edge_ideal(example_graph)
    assert taylor_betti(ideal, field) == quotient_betti(ideal, field)


def test_taylor_of_two_edges(field):
    table = taylor_betti(minimalize([(1, 1, 0), (0, 1, 1)]), field)
    assert table.entries == {(0, (0, 0, 0)): 1, (1, (0, 1, 1)): 1, (1, (1, 1, 0)): 1, (2, (1, 1, 1)): 1}


def test_taylor_edge_cases(field):
    assert taylor_betti(minimalize([], 2), field).entries == {(0, (0, 0)): 1}
    with pytest.raises(ValueError):
        taylor_betti(minimalize([(0, 0)]), field)
    ideal = minimalize([tuple(1 if k in (i, i + 1) else 0 for k in range(5)) for i in range(4)])
    with pytest.raises(CapExceededError):
        taylor_betti(ideal, field, cap=3)


def test_oracle_on_random_ideals(field):
    rng = np.random.default_rng(200)
    for _ in range(200):
        ideal = random_monomial_ideal(rng)
        report = oracle_compare(ideal, field)
        assert report.overall, report.failures()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_oracle_in_small_characteristic(p):
    rng = np.random.default_rng(p)
    for _ in range(25):
        report = oracle_compare(random_monomial_ideal(rng, n_vars=4), FieldSpec(p))
        assert report.status_of("oracle") == CheckStatus.passed
