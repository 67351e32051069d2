"""
betti-utilities - cli/explore.py

Exhaustive small-graph experiments on two open questions:

    underlying-graph    do the Betti numbers of R/I(G), G the graph with every weight set to 1,
                        bound those of R/I(D)?
    weight-reduction    which of the sink identities survive weight reduction on any
                        non trivial vertex?

Licensed under the MIT License.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from betti_utils.betti.betti_table import graded_view, invariants_of, lift, to_quotient, total_view
from betti_utils.cli.enumeration import enumerate_graphs
from betti_utils.cli.graph_file import render_graph_file
from betti_utils.graph.weighted_oriented_graph import (
    WeightedOrientedGraph,
    delete_vertices,
    roles,
    underlying_graph,
    weight_reduce,
)
from betti_utils.homology.field_linear_algebra import FieldSpec
from betti_utils.ideal.monomial_ideal import DEFAULT_LCM_CAP, edge_ideal
from betti_utils.verify.checks import ideal_table

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 6
DEFAULT_MAX_WEIGHT = 3


class Question(Enum):
    underlying_graph = "underlying-graph"
    weight_reduction = "weight-reduction"


SUB_QUESTIONS = {
    Question.underlying_graph: ("totals_bounded", "pdim_bounded", "reg_bounded"),
    Question.weight_reduction: ("totals_equal", "graded_relation", "pdim_equal", "reg_plus_one"),
}


class BoundsError(ValueError):
    """ Experiment bounds outside the configured guard """


@dataclass(frozen=True)
class ExperimentBounds:
    max_n: int
    max_weight: int
    question: Question

    def check(self, guard_n: int = DEFAULT_MAX_N, guard_weight: int = DEFAULT_MAX_WEIGHT, force: bool = False):
        """
        :raises BoundsError: non positive bounds, or bounds past the guard without force
        """
        if self.max_n < 1 or self.max_weight < 1:
            raise BoundsError("Bounds must be positive, got max_n={} max_weight={}".format(self.max_n, self.max_weight))
        if force:
            return
        if self.max_n > guard_n or self.max_weight > guard_weight:
            raise BoundsError(
                "Bounds max_n={} max_weight={} exceed the guard {}/{}; use --force-cap to run anyway".format(
                    self.max_n, self.max_weight, guard_n, guard_weight
                )
            )


@dataclass
class ExploreResult:
    report: str
    frame: pd.DataFrame
    counterexamples: List[Tuple[str, str]] = field(default_factory=list)


def vertex_category(graph: WeightedOrientedGraph, v: int) -> str:
    if roles(graph)[v].is_sink:
        return "sink"
    return "weight_2" if graph.weight(v) == 2 else "weight_3_plus"


def compare_underlying(graph: WeightedOrientedGraph, field_spec: FieldSpec, cap: int = DEFAULT_LCM_CAP) -> Dict[str, bool]:
    """
    Total Betti numbers, pdim and reg of R/I(G) against those of R/I(D).

    :param graph: D
    :param field_spec: coefficient field
    :return: sub question -> holds
    """
    weighted = to_quotient(ideal_table(edge_ideal(graph), field_spec, cap))
    plain = to_quotient(ideal_table(edge_ideal(underlying_graph(graph)), field_spec, cap))
    totals, plain_totals = total_view(weighted), total_view(plain)
    weighted_invariants, plain_invariants = invariants_of(weighted), invariants_of(plain)
    return {
        "totals_bounded": all(value <= totals.get(i, 0) for i, value in plain_totals.items()),
        "pdim_bounded": plain_invariants.pdim <= weighted_invariants.pdim,
        "reg_bounded": plain_invariants.reg <= weighted_invariants.reg,
    }


def compare_reduction(
    graph: WeightedOrientedGraph, v: int, field_spec: FieldSpec, cap: int = DEFAULT_LCM_CAP
) -> Dict[str, bool]:
    """
    Weight reduction identities at any non trivial vertex v, D' = D with w_v lowered by one:
    equal total Betti numbers, the graded relation
    beta_{i,j}(I(D)) = beta_{i,j-1}(I(D')) - beta_{i,j-1}(I(D - v)) + beta_{i,j}(I(D - v)),
    equal pdim and the conjectured reg(R/I(D)) = reg(R/I(D')) + 1, which can fail even at a sink.

    :param graph: D
    :param v: non trivial vertex
    :param field_spec: coefficient field
    :return: sub question -> holds
    """
    reduced = weight_reduce(graph, v)
    deleted = delete_vertices(graph, [v])
    table = ideal_table(edge_ideal(graph), field_spec, cap)
    reduced_table = ideal_table(edge_ideal(reduced), field_spec, cap)
    deleted_graded = graded_view(lift(ideal_table(edge_ideal(deleted), field_spec, cap), deleted.label_map, graph.n))
    reduced_graded = graded_view(reduced_table)

    predicted: Dict[Tuple[int, int], int] = {}
    for (i, j), value in reduced_graded.items():
        predicted[(i, j + 1)] = predicted.get((i, j + 1), 0) + value
    for (i, j), value in deleted_graded.items():
        predicted[(i, j + 1)] = predicted.get((i, j + 1), 0) - value
        predicted[(i, j)] = predicted.get((i, j), 0) + value
    predicted = {k: value for k, value in predicted.items() if value}

    invariants = invariants_of(to_quotient(table))
    reduced_invariants = invariants_of(to_quotient(reduced_table))
    return {
        "totals_equal": total_view(table) == total_view(reduced_table),
        "graded_relation": predicted == graded_view(table),
        "pdim_equal": invariants.pdim == reduced_invariants.pdim,
        "reg_plus_one": invariants.reg == reduced_invariants.reg + 1,
    }


def _evaluate(graph: WeightedOrientedGraph, question: Question, field_spec: FieldSpec, cap: int) -> List[dict]:
    described = graph.describe()
    if question == Question.underlying_graph:
        outcome = compare_underlying(graph, field_spec, cap)
        return [
            {"graph": described, "n": graph.n, "vertex": 0, "category": "all", "sub_question": k, "holds": held}
            for k, held in outcome.items()
        ]
    rows = []
    for v in graph.vertices:
        if graph.weight(v) < 2:
            continue
        category = vertex_category(graph, v)
        for k, held in compare_reduction(graph, v, field_spec, cap).items():
            rows.append(
                {"graph": described, "n": graph.n, "vertex": v, "category": category, "sub_question": k, "holds": held}
            )
    return rows


def run_explore(
    bounds: ExperimentBounds,
    field_spec: Optional[FieldSpec] = None,
    n_jobs: int = 1,
    max_counterexamples: int = 5,
    cap: int = DEFAULT_LCM_CAP,
    guard_n: int = DEFAULT_MAX_N,
    guard_weight: int = DEFAULT_MAX_WEIGHT,
    force: bool = False,
    progress: bool = False,
) -> ExploreResult:
    """
    Enumerate every weighted oriented graph within bounds up to isomorphism and tally, per vertex
    category and sub question, how often each identity holds.

    :param bounds: vertex count, weight and question
    :param field_spec: coefficient field
    :param n_jobs: joblib workers, 1 runs in process
    :param max_counterexamples: graph files kept per failing sub question
    :param cap: lcm lattice cap
    :param guard_n: largest max_n accepted without force
    :param guard_weight: largest max_weight accepted without force
    :param force: ignore the guards
    :param progress: show a tqdm progress bar
    :return: :class:`ExploreResult`
    :raises BoundsError: bounds outside the guard
    """
    field_spec = field_spec or FieldSpec()
    bounds.check(guard_n, guard_weight, force)
    graphs = list(enumerate_graphs(bounds.max_n, bounds.max_weight)) if bounds.max_n >= 2 else []
    logger.info("Exploring %s over %d graphs", bounds.question.value, len(graphs))

    if n_jobs == 1:
        batches = [
            _evaluate(g, bounds.question, field_spec, cap)
            for g in tqdm(graphs, desc=bounds.question.value, disable=not progress)
        ]
    else:
        batches = Parallel(n_jobs=n_jobs)(delayed(_evaluate)(g, bounds.question, field_spec, cap) for g in graphs)

    columns = ["graph", "n", "vertex", "category", "sub_question", "holds"]
    frame = pd.DataFrame([row for batch in batches for row in batch], columns=columns)
    lines = [
        "question: {}".format(bounds.question.value),
        "max_n: {}".format(bounds.max_n),
        "max_weight: {}".format(bounds.max_weight),
        "field: {}".format(field_spec.p),
        "graphs: {}".format(len(graphs)),
    ]

    counterexamples: List[Tuple[str, str]] = []
    if frame.empty:
        lines.append("no applicable graphs")
        return ExploreResult("\n".join(lines) + "\n", frame, counterexamples)

    frame["holds"] = frame["holds"].astype(bool)
    summary = (
        frame.groupby(["category", "sub_question"], sort=True)["holds"]
        .agg(holds="sum", checked="size")
        .reset_index()
    )
    summary["fails"] = summary["checked"] - summary["holds"]
    lines.append(summary[["category", "sub_question", "holds", "fails"]].to_string(index=False))

    by_graph = {g.describe(): g for g in graphs}
    failures = frame[~frame["holds"]]
    for (category, sub_question), group in failures.groupby(["category", "sub_question"], sort=True):
        for position, row in enumerate(group.head(max_counterexamples).itertuples(index=False)):
            name = "{}_{}_{}.graph".format(category, sub_question, position + 1)
            comment = "{} fails {}".format(bounds.question.value, sub_question)
            if row.vertex:
                comment += " at vertex {}".format(row.vertex)
            counterexamples.append((name, render_graph_file(by_graph[row.graph], comment)))
    lines.append("counterexamples: {}".format(len(counterexamples)))
    return ExploreResult("\n".join(lines) + "\n", frame, counterexamples)
