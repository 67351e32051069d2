"""
betti-utilities - tests/cli/test_explore.py

Licensed under the MIT License.
"""
import pytest

from betti_utils.cli.explore import (
    BoundsError,
    ExperimentBounds,
    Question,
    compare_reduction,
    compare_underlying,
    run_explore,
    vertex_category,
)
from betti_utils.cli.graph_file import parse_graph_file
from betti_utils.graph.families import FamilyKind, family


def test_reduction_chain(reduction_chain, field):
    graph, once, twice, _ = reduction_chain

    first = compare_reduction(graph, 2, field)
    assert first["totals_equal"] and first["pdim_equal"] and first["reg_plus_one"]

    second = compare_reduction(once, 3, field)
    assert not second["pdim_equal"]

    third = compare_reduction(twice, 2, field)
    assert not third["reg_plus_one"]


def test_reduction_at_path_end_keeps_every_identity(field):
    outcome = compare_reduction(family(FamilyKind.path, 3, [1, 1, 3]), 3, field)
    assert all(outcome.values())


def test_underlying_graph_bounds_example(example_graph, field):
    assert compare_underlying(example_graph, field) == {
        "totals_bounded": True,
        "pdim_bounded": True,
        "reg_bounded": True,
    }


def test_vertex_category(example_graph):
    graph = family(FamilyKind.path, 3, [1, 2, 3])
    assert vertex_category(graph, 3) == "sink"
    assert vertex_category(graph, 2) == "weight_2"
    assert vertex_category(example_graph, 2) == "weight_3_plus"


def test_bounds_guard():
    with pytest.raises(BoundsError):
        ExperimentBounds(7, 2, Question.weight_reduction).check()
    with pytest.raises(BoundsError):
        ExperimentBounds(0, 2, Question.weight_reduction).check(force=True)
    ExperimentBounds(7, 2, Question.weight_reduction).check(force=True)


def test_trivial_bounds(field):
    result = run_explore(ExperimentBounds(1, 1, Question.underlying_graph), field)
    assert result.frame.empty
    assert "graphs: 0" in result.report
    assert "no applicable graphs" in result.report


def test_underlying_question_small(field):
    result = run_explore(ExperimentBounds(3, 2, Question.underlying_graph), field)
    assert result.report.startswith("question: underlying-graph\n")
    per_question = result.frame.groupby("sub_question").size()
    assert set(per_question.index) == {"totals_bounded", "pdim_bounded", "reg_bounded"}
    assert per_question.nunique() == 1
    for _, text in result.counterexamples:
        parse_graph_file(text)


def test_weight_reduction_question_small(field):
    result = run_explore(ExperimentBounds(3, 3, Question.weight_reduction), field, max_counterexamples=1)
    frame = result.frame
    assert set(frame["category"]) <= {"sink", "weight_2", "weight_3_plus"}
    sinks = frame[frame["category"] == "sink"]
    assert not sinks.empty and sinks["holds"].all()
    names = [name for name, _ in result.counterexamples]
    assert len(names) == len(set(names))
    assert len(names) == frame[~frame["holds"]].groupby(["category", "sub_question"]).ngroups


def test_parallel_explore_is_deterministic(field):
    bounds = ExperimentBounds(3, 2, Question.weight_reduction)
    assert run_explore(bounds, field).report == run_explore(bounds, field, n_jobs=2).report
