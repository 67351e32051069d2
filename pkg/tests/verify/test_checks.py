"""
betti-utilities - tests/verify/test_checks.py

Licensed under the MIT License.
"""
from itertools import combinations, product

import numpy as np
import pytest

from betti_utils.betti.betti_table import graded_view, invariants_of
from betti_utils.betti.upper_koszul import quotient_betti
from betti_utils.cli.enumeration import enumerate_graphs
from betti_utils.cli.explore import compare_reduction
from betti_utils.graph.families import FamilyKind, attach_leaf_sink, family, random_graph, random_rooted_tree
from betti_utils.graph.weighted_oriented_graph import build_graph, has_full_pdim_structure, roles, weight_reduce
from betti_utils.ideal.monomial_ideal import edge_ideal, minimalize
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
from betti_utils.verify.verification_report import CheckStatus


def assert_passes(report):
    assert report.overall, [c for c in report.failures()]
    assert report.applicable()


def test_weight_reduction_not_applicable(example_graph, field):
    report = check_weight_reduction(example_graph, 1, field)
    assert report.status_of("weight_reduction") == CheckStatus.not_applicable
    report = check_weight_reduction(example_graph, 2, field)
    assert report.status_of("weight_reduction") == CheckStatus.not_applicable


def test_weight_reduction_on_path(field):
    report = check_weight_reduction(family(FamilyKind.path, 3, [1, 1, 2]), 3, field)
    assert_passes(report)
    assert report.status_of("weight_reduction.reg") == CheckStatus.passed


def test_weight_reduction_every_sink_exhaustive(field):
    checked = 0
    for graph in enumerate_graphs(4, 3):
        for v, role in roles(graph).items():
            if role.is_sink and not role.is_trivial:
                assert_passes(check_weight_reduction(graph, v, field))
                checked += 1
    assert checked == 584


def test_weight_reduction_reg_can_stay_flat(field):
    graph = build_graph(4, [(1, 2), (1, 4), (4, 3)], {2: 2, 3: 2})
    table = quotient_betti(edge_ideal(graph), field)
    reduced_table = quotient_betti(edge_ideal(weight_reduce(graph, 2)), field)
    assert graded_view(table) == {(0, 0): 1, (1, 2): 1, (1, 3): 2, (2, 4): 2}
    assert graded_view(reduced_table) == {(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 1}
    assert invariants_of(table).reg == invariants_of(reduced_table).reg == 2

    report = check_weight_reduction(graph, 2, field)
    assert_passes(report)
    assert report.status_of("weight_reduction.reg") == CheckStatus.passed
    assert report.status_of("weight_reduction.reg_bound") == CheckStatus.passed
    assert verify_graph(graph, field, checks=["weight_reduction"]).overall
    assert not compare_reduction(graph, 2, field)["reg_plus_one"]


def test_mapping_cone_on_leaf_sinks(field):
    rng = np.random.default_rng(30)
    for _ in range(30):
        base = random_graph(rng, int(rng.integers(2, 6)), max_weight=3)
        u = int(rng.integers(1, base.n + 1))
        graph = attach_leaf_sink(base, u, int(rng.integers(1, 4)))
        assert_passes(check_mapping_cone(graph, graph.n, field))


def test_mapping_cone_not_applicable(example_graph, field):
    report = check_mapping_cone(example_graph, 3, field)
    assert report.status_of("mapping_cone") == CheckStatus.not_applicable


@pytest.mark.parametrize("n", [3, 4])
def test_complete_sink_every_orientation(n, field):
    pairs = list(combinations(range(1, n), 2))
    for flips in product((False, True), repeat=len(pairs)):
        edges = [(j, i) if flip else (i, j) for (i, j), flip in zip(pairs, flips)]
        edges += [(i, n) for i in range(1, n)]
        for w in (1, 2, 3):
            graph = build_graph(n, edges, {n: w, 1: 2})
            assert_passes(check_complete_sink(graph, n, field))


def test_complete_sink_not_applicable(field):
    report = check_complete_sink(family(FamilyKind.path, 3), 3, field)
    assert report.status_of("complete_sink") == CheckStatus.not_applicable


def test_betti_splitting_rejects_bad_parts(field):
    ideal = minimalize([(1, 1, 0), (0, 1, 1)])
    first = minimalize([(1, 1, 0)])
    with pytest.raises(ValueError):
        check_betti_splitting(ideal, first, minimalize([], 3), field)
    with pytest.raises(ValueError):
        check_betti_splitting(ideal, first, first, field)
    with pytest.raises(ValueError):
        check_betti_splitting(ideal, first, minimalize([(1, 0, 1)]), field)


def test_betti_splitting_of_two_edges(field):
    ideal = minimalize([(1, 1, 0), (0, 1, 1)])
    report = check_betti_splitting(ideal, minimalize([(1, 1, 0)]), minimalize([(0, 1, 1)]), field)
    assert_passes(report)


def test_induced_monotonicity_on_example(example_graph, field):
    for size in range(1, 5):
        for subset in combinations(example_graph.vertices, size):
            assert_passes(check_induced_monotonicity(example_graph, subset, field))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_closed_formulas_natural_cycle(n, field):
    report = check_closed_formulas(family(FamilyKind.cycle, n, [2] * n), field)
    assert_passes(report)
    assert report.status_of("natural_cycle.reg") == CheckStatus.passed
    assert report.status_of("full_pdim.unique_extremal") == CheckStatus.passed


def test_closed_formulas_rooted_trees(field):
    rng = np.random.default_rng(8)
    for n in range(2, 7):
        report = check_closed_formulas(random_rooted_tree(rng, n), field)
        assert_passes(report)
        assert report.status_of("rooted.reg") == CheckStatus.passed


def test_closed_formulas_rooted_forest(field):
    forest = build_graph(6, [(1, 2), (1, 3), (4, 5)], {2: 2, 3: 3, 5: 2})
    report = check_closed_formulas(forest, field)
    assert_passes(report)
    assert report.status_of("rooted_forest.pdim") == CheckStatus.passed
    assert report.status_of("rooted") == CheckStatus.not_applicable


@pytest.mark.parametrize("n", [3, 4, 5])
def test_closed_formulas_complete_natural(n, field):
    rng = np.random.default_rng(40 + n)
    checked = 0
    while checked < 4:
        weights = [1] + [int(w) for w in rng.integers(1, 4, size=n - 1)]
        if max(weights) < 2:
            continue
        report = check_closed_formulas(family(FamilyKind.complete_natural, n, weights), field)
        assert_passes(report)
        assert report.status_of("natural_complete.pdim") == CheckStatus.passed
        assert report.status_of("natural_complete.reg") == CheckStatus.passed
        assert report.status_of("complete_sink.reg") == CheckStatus.passed
        checked += 1


@pytest.mark.parametrize("n, w", [(3, 2), (3, 3), (4, 2), (4, 3), (5, 1), (5, 2), (5, 3), (5, 4)])
def test_closed_formulas_star(n, w, field):
    report = check_closed_formulas(family(FamilyKind.star_center_sink, n, [1] * (n - 1) + [w]), field)
    assert_passes(report)
    assert report.status_of("star.pdim") == CheckStatus.passed
    assert report.status_of("star.reg") == CheckStatus.passed
    assert report.status_of("star.linear") == CheckStatus.passed


def test_full_pdim_characterization_exhaustive(field):
    for graph in enumerate_graphs(4, 2):
        table = quotient_betti(edge_ideal(graph), field)
        invariants = invariants_of(table)
        full = has_full_pdim_structure(graph)
        assert full == (invariants.pdim == graph.n), graph.describe()
        if full:
            assert table.get(graph.n, graph.weights), graph.describe()
            assert invariants.reg == graph.total_weight() - graph.n
            assert invariants.unique_extremal


def test_closed_formulas_paths_exhaustive(field):
    for n in range(3, 7):
        choices = (1, 2, 3) if n <= 5 else (1, 2)
        for signs in product("+-", repeat=n - 1):
            for weights in product(choices, repeat=n):
                graph = family(FamilyKind.path, n, list(weights), "".join(signs))
                assert check_closed_formulas(graph, field).overall, graph.describe()


def test_verify_graph_on_example(example_graph, field):
    report = verify_graph(example_graph, field)
    assert_passes(report)
    assert report.status_of("oracle") == CheckStatus.passed
    assert report.status_of("closed.path.reg_nontrivial_neighbor") == CheckStatus.passed
    assert report.status_of("v1.mapping_cone.recursion") == CheckStatus.passed
    assert report.status_of("minus_v3.induced.restriction") == CheckStatus.passed


def test_verify_graph_selected_checks(field):
    graph = family(FamilyKind.path, 3, [1, 1, 2])
    report = verify_graph(graph, field, checks=["weight_reduction"])
    assert {c.check_id.split(".")[0] for c in report.checks} == {"v3"}
    with pytest.raises(ValueError):
        verify_graph(graph, field, checks=["nonsense"])
    assert set(ALL_CHECKS) == {"oracle", "closed", "weight_reduction", "mapping_cone", "induced"}


def test_verify_graph_edgeless(field):
    report = verify_graph(build_graph(2, []), field, checks=["oracle"])
    assert report.status_of("oracle") == CheckStatus.not_applicable
    assert edge_ideal(build_graph(2, [])).is_zero
