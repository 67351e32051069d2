"""
betti-utilities - verify/checks.py

Recursions and closed formulas for Betti numbers of edge ideals of weighted oriented graphs,
checked against directly computed tables.

Licensed under the MIT License.
"""
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, Optional, Sequence, Tuple

from betti_utils.betti.betti_table import (
    BettiTable,
    graded_view,
    invariants_of,
    lift,
    to_quotient,
    total_view,
)
from betti_utils.betti.upper_koszul import multigraded_betti
from betti_utils.graph.structure import (
    is_complete,
    is_natural_cycle,
    is_transitive_tournament,
    path_tail,
    rooted_forest_roots,
    rooted_root,
    sink_vertices,
    star_center_sink,
)
from betti_utils.graph.weighted_oriented_graph import (
    WeightedOrientedGraph,
    delete_vertices,
    has_full_pdim_structure,
    induced_subgraph,
    roles,
    weight_reduce,
)
from betti_utils.homology.field_linear_algebra import FieldSpec
from betti_utils.ideal.monomial_ideal import (
    DEFAULT_LCM_CAP,
    MonomialIdeal,
    colon_by_monomial,
    degree,
    edge_ideal,
    extend_ring,
    intersection,
    minimalize,
)
from betti_utils.verify.taylor import DEFAULT_TAYLOR_CAP, oracle_compare
from betti_utils.verify.verification_report import (
    ResultsGenerator,
    VerificationReport,
    check_result,
    combine_reports,
    compare_tables,
)

ALL_CHECKS = ("oracle", "closed", "weight_reduction", "mapping_cone", "induced")

Graded = Dict[Tuple[int, int], int]


@lru_cache(maxsize=512)
def ideal_table(ideal: MonomialIdeal, field: FieldSpec, cap: int = DEFAULT_LCM_CAP, force: bool = False) -> BettiTable:
    """ Cached IDEAL convention table """
    return multigraded_betti(ideal, field, cap=cap, force=force)


def quotient_table(ideal: MonomialIdeal, field: FieldSpec, cap: int = DEFAULT_LCM_CAP, force: bool = False) -> BettiTable:
    return to_quotient(ideal_table(ideal, field, cap, force))


def _graph_quotient(graph: WeightedOrientedGraph, field: FieldSpec, cap: int, force: bool) -> BettiTable:
    return quotient_table(edge_ideal(graph), field, cap, force)


def _recursion_check(
    check_id: str, actual: Graded, predicted: Graded, keep=lambda i, j: True
) -> check_result:
    """ Compare two graded tables on the index pairs accepted by keep """
    return compare_tables(
        check_id,
        {k: v for k, v in predicted.items() if keep(*k)},
        {k: v for k, v in actual.items() if keep(*k)},
    )


def _add(*tables: Graded) -> Graded:
    result: Graded = {}
    for table in tables:
        for key, value in table.items():
            result[key] = result.get(key, 0) + value
    return result


def _shift(table: Graded, di: int, dj: int) -> Graded:
    """ Entry (i, j) moves to (i + di, j + dj) """
    return {(i + di, j + dj): v for (i, j), v in table.items()}


def _quotient_reg(entries: Dict) -> int:
    """ Largest j - i over R/I entries coming from IDEAL entries, 0 for the beta_0 term """
    return max([degree(b) - i - 1 for i, b in entries] + [0])


def _reg_after_deleting(graph: WeightedOrientedGraph, removed: Iterable[int], field: FieldSpec, cap: int, force: bool) -> int:
    """ reg of R/I(graph minus removed), 0 when nothing is left """
    removed = set(removed)
    if len(removed) >= graph.n:
        return 0
    return invariants_of(_graph_quotient(delete_vertices(graph, removed), field, cap, force)).reg


def check_betti_splitting(
    ideal: MonomialIdeal,
    first: MonomialIdeal,
    second: MonomialIdeal,
    field: Optional[FieldSpec] = None,
    cap: int = DEFAULT_LCM_CAP,
    force: bool = False,
) -> VerificationReport:
    """
    Check whether I = J + K is a Betti splitting:
    beta_{i,j}(R/I) = beta_{i,j}(R/J) + beta_{i,j}(R/K) + beta_{i-1,j}(R/(J cap K)) for j >= 1.
    Row i = 1 and rows i >= 2 are reported separately.

    :param ideal: I
    :param first: J, non zero
    :param second: K, non zero
    :param field: coefficient field
    :return: :class:`VerificationReport`
    :raises ValueError: when the generators of I are not the disjoint union of those of J and K
    """
    field = field or FieldSpec()
    if first.is_zero or second.is_zero:
        raise ValueError("Both parts of a Betti splitting must be non zero ideals")
    if set(first.generators) & set(second.generators):
        raise ValueError("The generator sets of the two parts overlap")
    if set(first.generators) | set(second.generators) != set(ideal.generators):
        raise ValueError("The two generator sets do not partition the generators of the ideal")

    meet = intersection(first, second)
    whole = graded_view(quotient_table(ideal, field, cap, force))
    predicted = _add(
        graded_view(quotient_table(first, field, cap, force)),
        graded_view(quotient_table(second, field, cap, force)),
        _shift(graded_view(quotient_table(meet, field, cap, force)), 1, 0),
    )
    checks = (
        _recursion_check("splitting.row_1", whole, predicted, lambda i, j: i == 1 and j >= 1),
        _recursion_check("splitting.rows_2_and_up", whole, predicted, lambda i, j: i >= 2 and j >= 1),
    )
    subject = "{} = {} + {}".format(ideal, first, second)
    return VerificationReport(subject, field.p, checks)


def check_weight_reduction(
    graph: WeightedOrientedGraph,
    v: int,
    field: Optional[FieldSpec] = None,
    cap: int = DEFAULT_LCM_CAP,
    force: bool = False,
) -> VerificationReport:
    """
    Compare D with its weight reduced form D' on a non trivial sink v and with D minus v.

    reg(R/I(D)) is checked against the strands of D': the b_v = 0 entries keep their degree
    and the b_v = w - 1 entries gain one, so reg(R/I(D)) <= reg(R/I(D')) + 1 with equality only
    when the shifted strand attains the regularity of D'.

    :param graph: D
    :param v: non trivial sink vertex
    :param field: coefficient field
    :return: :class:`VerificationReport`
    """
    field = field or FieldSpec()
    subject = "{} reduced on {}".format(graph.describe(), v)
    role = roles(graph).get(v)
    if role is None or not role.is_sink or role.is_trivial:
        return VerificationReport(
            subject,
            field.p,
            (ResultsGenerator.create_not_applicable("weight_reduction", "non-trivial sink vertex"),),
        )

    w = graph.weight(v)
    reduced = weight_reduce(graph, v)
    deleted = delete_vertices(graph, [v])
    table = ideal_table(edge_ideal(graph), field, cap, force)
    reduced_table = ideal_table(edge_ideal(reduced), field, cap, force)
    deleted_table = lift(ideal_table(edge_ideal(deleted), field, cap, force), deleted.label_map, graph.n)

    def coordinate(b):
        return b[v - 1]

    outside = sorted({coordinate(b) for _, b in table.entries} - {0, w})
    support_check = (
        ResultsGenerator.create_pass("weight_reduction.multidegree_support", [0, w], [0, w])
        if not outside
        else ResultsGenerator.create_failure(
            "weight_reduction.multidegree_support", [0, w], outside, {"coordinate_values": outside}
        )
    )

    def restricted(source: BettiTable, value: int):
        return {(i, b): x for (i, b), x in source.entries.items() if coordinate(b) == value}

    def moved(source: Dict, new_value: int):
        result = {}
        for (i, b), x in source.items():
            b = list(b)
            b[v - 1] = new_value
            result[(i, tuple(b))] = x
        return result

    zero_part = restricted(table, 0)
    zero_checks = (
        compare_tables("weight_reduction.zero_coordinate_deleted", restricted(deleted_table, 0), zero_part),
        compare_tables("weight_reduction.zero_coordinate_reduced", restricted(reduced_table, 0), zero_part),
    )
    top_check = compare_tables(
        "weight_reduction.top_coordinate",
        moved(restricted(reduced_table, w - 1), w),
        restricted(table, w),
    )

    totals_check = compare_tables(
        "weight_reduction.totals", total_view(reduced_table), total_view(table)
    )

    graded = graded_view(table)
    reduced_graded = graded_view(reduced_table)
    deleted_graded = graded_view(deleted_table)
    predicted = _add(
        _shift(reduced_graded, 0, 1),
        {k: -x for k, x in _shift(deleted_graded, 0, 1).items()},
        deleted_graded,
    )
    recursion_check = _recursion_check(
        "weight_reduction.graded_recursion", graded, predicted, lambda i, j: j >= 1
    )

    invariants = invariants_of(to_quotient(table))
    reduced_invariants = invariants_of(to_quotient(reduced_table))
    # Only the strand with b_v = w - 1 moves up a degree; the b_v = 0 strand stays put.
    strand_reg = max(
        _quotient_reg(restricted(reduced_table, 0)),
        _quotient_reg(restricted(reduced_table, w - 1)) + 1,
    )
    bound = reduced_invariants.reg + 1
    invariant_checks = (
        ResultsGenerator.create_comparison("weight_reduction.pdim", reduced_invariants.pdim, invariants.pdim),
        ResultsGenerator.create_comparison("weight_reduction.reg", strand_reg, invariants.reg),
        ResultsGenerator.create_pass("weight_reduction.reg_bound", bound, invariants.reg)
        if invariants.reg <= bound
        else ResultsGenerator.create_failure(
            "weight_reduction.reg_bound", bound, invariants.reg, {"reg": invariants.reg, "bound": bound}
        ),
    )
    checks = (support_check,) + zero_checks + (top_check, totals_check, recursion_check) + invariant_checks
    return VerificationReport(subject, field.p, checks)


def check_mapping_cone(
    graph: WeightedOrientedGraph,
    v: int,
    field: Optional[FieldSpec] = None,
    cap: int = DEFAULT_LCM_CAP,
    force: bool = False,
) -> VerificationReport:
    """
    For a leaf sink v with in-neighbor u and weight w:
    beta_{i,j}(R/I(D)) = beta_{i,j}(R/I(D - v)) + beta_{i-1,j-w-1}(R/(I(D - v) : x_u)),
    reg(R/I(D)) = max(reg(R/I(D - v)), reg(R/(I(D - v) : x_u)) + w) and
    pdim(R/I(D)) = max(pdim(R/I(D - v)), pdim(R/(I(D - v) : x_u)) + 1).

    :param graph: D
    :param v: leaf sink vertex
    :param field: coefficient field
    :return: :class:`VerificationReport`
    """
    field = field or FieldSpec()
    subject = "{} leaf sink {}".format(graph.describe(), v)
    role = roles(graph).get(v)
    if role is None or not (role.is_leaf and role.is_sink):
        return VerificationReport(
            subject,
            field.p,
            (ResultsGenerator.create_not_applicable("mapping_cone", "leaf sink vertex"),),
        )

    (u,) = graph.in_neighbors(v)
    w = graph.weight(v)
    deleted = delete_vertices(graph, [v])
    rest = extend_ring(edge_ideal(deleted), deleted.label_map, graph.n)

    x_u = tuple(1 if k == u else 0 for k in graph.vertices)
    edge_monomial = tuple(1 if k == u else (w if k == v else 0) for k in graph.vertices)
    colon = colon_by_monomial(rest, x_u)

    whole = _graph_quotient(graph, field, cap, force)
    rest_table = quotient_table(rest, field, cap, force)
    colon_table = quotient_table(colon, field, cap, force)
    predicted = _add(graded_view(rest_table), _shift(graded_view(colon_table), 1, w + 1))

    invariants = invariants_of(whole)
    rest_invariants = invariants_of(rest_table)
    colon_invariants = invariants_of(colon_table)
    checks = (
        ResultsGenerator.create_comparison(
            "mapping_cone.colon_identity", colon, colon_by_monomial(rest, edge_monomial)
        ),
        _recursion_check("mapping_cone.recursion", graded_view(whole), predicted),
        ResultsGenerator.create_comparison(
            "mapping_cone.reg", max(rest_invariants.reg, colon_invariants.reg + w), invariants.reg
        ),
        ResultsGenerator.create_comparison(
            "mapping_cone.pdim", max(rest_invariants.pdim, colon_invariants.pdim + 1), invariants.pdim
        ),
    )
    return VerificationReport(subject, field.p, checks)


def check_complete_sink(
    graph: WeightedOrientedGraph,
    v: int,
    field: Optional[FieldSpec] = None,
    cap: int = DEFAULT_LCM_CAP,
    force: bool = False,
) -> VerificationReport:
    """
    Complete graph K_n with a sink v of weight w, K_{n-1} = K_n - v:
    beta_{i,j}(K_n) = beta_{i,j}(K_{n-1}) + C(n-1, i)[j = i + w] + beta_{i-1,j-w}(K_{n-1}) for i >= 2,
    pdim in {n-1, n} and reg(K_n) = reg(K_{n-1}) + w - 1 for n >= 3. The splitting
    I(K_n) = I(K_{n-1}) + (generators divisible by x_v) is checked as well.

    :param graph: complete graph
    :param v: sink vertex
    :param field: coefficient field
    :return: :class:`VerificationReport`
    """
    field = field or FieldSpec()
    n = graph.n
    subject = "{} sink {}".format(graph.describe(), v)
    role = roles(graph).get(v)
    if not is_complete(graph) or role is None or not role.is_sink or n < 3:
        return VerificationReport(
            subject,
            field.p,
            (ResultsGenerator.create_not_applicable("complete_sink", "complete graph on n >= 3 vertices with a sink"),),
        )

    w = graph.weight(v)
    ideal = edge_ideal(graph)
    smaller = delete_vertices(graph, [v])
    smaller_ideal = extend_ring(edge_ideal(smaller), smaller.label_map, n)
    at_sink = minimalize([g for g in ideal.generators if g[v - 1] > 0], n)

    whole = graded_view(_graph_quotient(graph, field, cap, force))
    smaller_table = quotient_table(smaller_ideal, field, cap, force)
    smaller_graded = graded_view(smaller_table)
    binomial = {(i, i + w): comb(n - 1, i) for i in range(1, n)}
    predicted = _add(smaller_graded, binomial, _shift(smaller_graded, 1, w))

    invariants = invariants_of(_graph_quotient(graph, field, cap, force))
    smaller_invariants = invariants_of(smaller_table)
    pdim_check = (
        ResultsGenerator.create_pass("complete_sink.pdim", [n - 1, n], invariants.pdim)
        if invariants.pdim in (n - 1, n)
        else ResultsGenerator.create_failure(
            "complete_sink.pdim", [n - 1, n], invariants.pdim, {"pdim": invariants.pdim}
        )
    )
    splitting = check_betti_splitting(ideal, smaller_ideal, at_sink, field, cap, force)
    checks = (
        _recursion_check("complete_sink.recursion", whole, predicted, lambda i, j: i >= 2),
        pdim_check,
        ResultsGenerator.create_comparison("complete_sink.reg", smaller_invariants.reg + w - 1, invariants.reg),
    ) + tuple(c._replace(check_id="complete_sink." + c.check_id) for c in splitting.checks)
    return VerificationReport(subject, field.p, checks)


def check_induced_monotonicity(
    graph: WeightedOrientedGraph,
    subset: Sequence[int],
    field: Optional[FieldSpec] = None,
    cap: int = DEFAULT_LCM_CAP,
    force: bool = False,
) -> VerificationReport:
    """
    For the induced subgraph D[S]: its multigraded Betti numbers equal those of D at multidegrees
    supported on S, its graded Betti numbers are bounded by those of D, and so are pdim and reg.

    :param graph: D
    :param subset: vertex subset S
    :param field: coefficient field
    :return: :class:`VerificationReport`
    """
    field = field or FieldSpec()
    subject = "{} induced on {}".format(graph.describe(), sorted(set(subset)))
    induced = induced_subgraph(graph, subset)
    table = ideal_table(edge_ideal(graph), field, cap, force)
    induced_table = lift(ideal_table(edge_ideal(induced), field, cap, force), induced.label_map, graph.n)

    kept = set(induced.label_map)
    on_subset = {
        (i, b): x
        for (i, b), x in table.entries.items()
        if all(b[k - 1] == 0 for k in graph.vertices if k not in kept)
    }

    graded = graded_view(table)
    induced_graded = graded_view(induced_table)
    exceeding = sorted(k for k, x in induced_graded.items() if x > graded.get(k, 0))
    bound_check = (
        ResultsGenerator.create_pass("induced.graded_bound", induced_graded, graded)
        if not exceeding
        else ResultsGenerator.create_failure(
            "induced.graded_bound",
            induced_graded,
            graded,
            {"index": exceeding[0], "induced": induced_graded[exceeding[0]], "whole": graded.get(exceeding[0], 0)},
        )
    )

    invariants = invariants_of(to_quotient(table))
    induced_invariants = invariants_of(to_quotient(induced_table))

    def at_most(check_id, smaller, larger):
        if smaller <= larger:
            return ResultsGenerator.create_pass(check_id, smaller, larger)
        return ResultsGenerator.create_failure(check_id, smaller, larger, {"induced": smaller, "whole": larger})

    checks = (
        compare_tables("induced.restriction", induced_table.entries, on_subset),
        bound_check,
        at_most("induced.pdim", induced_invariants.pdim, invariants.pdim),
        at_most("induced.reg", induced_invariants.reg, invariants.reg),
    )
    return VerificationReport(subject, field.p, checks)


def check_closed_formulas(
    graph: WeightedOrientedGraph,
    field: Optional[FieldSpec] = None,
    cap: int = DEFAULT_LCM_CAP,
    force: bool = False,
) -> VerificationReport:
    """
    Every closed formula whose hypothesis the graph meets; the rest are reported NOT_APPLICABLE.

    :param graph: D
    :param field: coefficient field
    :return: :class:`VerificationReport`
    """
    field = field or FieldSpec()
    n = graph.n
    table = _graph_quotient(graph, field, cap, force)
    invariants = invariants_of(table)
    total = graph.total_weight()
    na = ResultsGenerator.create_not_applicable
    compare = ResultsGenerator.create_comparison
    checks = []

    full = has_full_pdim_structure(graph)
    checks.append(compare("full_pdim.characterization", full, invariants.pdim == n))
    if full:
        top = table.get(n, graph.weights)
        checks.append(
            ResultsGenerator.create_pass("full_pdim.top_multidegree", "non zero", top)
            if top
            else ResultsGenerator.create_failure(
                "full_pdim.top_multidegree", "non zero", top, {"index": (n, graph.weights), "value": 0}
            )
        )
        checks.append(compare("full_pdim.reg", total - n, invariants.reg))
        checks.append(compare("full_pdim.unique_extremal", True, invariants.unique_extremal))
    else:
        checks.append(na("full_pdim.reg", "every vertex has an in-neighbor of weight >= 2"))

    root = rooted_root(graph)
    if root is not None and all(graph.weight(x) >= 2 for x in graph.vertices if x != root):
        checks.append(compare("rooted.pdim", n - 1, invariants.pdim))
        checks.append(compare("rooted.reg", total - n + 1, invariants.reg))
    else:
        checks.append(na("rooted", "rooted graph with non-trivial non-root weights"))

    roots = rooted_forest_roots(graph)
    covered = [x for x in graph.vertices if graph.degree(x) > 0]
    if roots is not None and all(graph.weight(x) >= 2 for x in covered if x not in roots):
        components = len(roots)
        covered_weight = sum(graph.weight(x) for x in covered)
        checks.append(compare("rooted_forest.pdim", len(covered) - components, invariants.pdim))
        checks.append(compare("rooted_forest.reg", covered_weight - len(covered) + components, invariants.reg))
    else:
        checks.append(na("rooted_forest", "rooted forest with non-trivial non-root weights"))

    if is_transitive_tournament(graph) and any(w >= 2 for w in graph.weights):
        checks.append(compare("natural_complete.pdim", n - 1, invariants.pdim))
        checks.append(compare("natural_complete.reg", total - n + 1, invariants.reg))
    else:
        checks.append(na("natural_complete", "naturally oriented complete graph with a non-trivial weight"))

    sinks = sink_vertices(graph) if is_complete(graph) and n >= 3 else []
    if sinks:
        sink_report = check_complete_sink(graph, sinks[-1], field, cap, force)
        checks.extend(sink_report.checks)
    else:
        checks.append(na("complete_sink", "complete graph on n >= 3 vertices with a sink"))

    center = star_center_sink(graph)
    if center is not None:
        w = graph.weight(center)
        graded = graded_view(table)
        off_line = sorted(k for k in graded if k[0] >= 1 and k[1] != k[0] + w)
        checks.append(compare("star.pdim", n - 1, invariants.pdim))
        checks.append(compare("star.reg", w, invariants.reg))
        checks.append(
            ResultsGenerator.create_pass("star.linear", "j = i + {}".format(w), "linear")
            if not off_line
            else ResultsGenerator.create_failure(
                "star.linear", "j = i + {}".format(w), off_line, {"index": off_line[0], "value": graded[off_line[0]]}
            )
        )
    else:
        checks.append(na("star", "star with center sink"))

    if is_natural_cycle(graph) and all(w >= 2 for w in graph.weights):
        checks.append(compare("natural_cycle.pdim", n, invariants.pdim))
        checks.append(compare("natural_cycle.reg", total - n, invariants.reg))
    else:
        checks.append(na("natural_cycle", "naturally oriented cycle with non-trivial weights"))

    tail = path_tail(graph)
    if tail is not None:
        r, s, t = tail
        reg_without_end = _reg_after_deleting(graph, [t], field, cap, force)
        if graph.weight(s) > 1:
            checks.append(compare("path.reg_nontrivial_neighbor", reg_without_end + graph.weight(t) - 1, invariants.reg))
        else:
            reg_without_three = _reg_after_deleting(graph, [r, s, t], field, cap, force)
            checks.append(
                compare(
                    "path.reg_trivial_neighbor",
                    max(reg_without_end, reg_without_three + graph.weight(t)),
                    invariants.reg,
                )
            )
    else:
        checks.append(na("path", "path ending in two consecutive forward edges"))

    return VerificationReport(graph.describe(), field.p, tuple(checks))


def verify_graph(
    graph: WeightedOrientedGraph,
    field: Optional[FieldSpec] = None,
    checks: Sequence[str] = ALL_CHECKS,
    cap: int = DEFAULT_LCM_CAP,
    taylor_cap: int = DEFAULT_TAYLOR_CAP,
    force: bool = False,
) -> VerificationReport:
    """
    Run the selected families of checks on one graph: the Taylor oracle, the closed formulas,
    weight reduction on every non trivial sink, the mapping cone on every leaf sink and
    induced monotonicity on every single vertex deletion.

    :param graph: D
    :param field: coefficient field
    :param checks: subset of ALL_CHECKS
    :return: :class:`VerificationReport`
    """
    field = field or FieldSpec()
    unknown = sorted(set(checks) - set(ALL_CHECKS))
    if unknown:
        raise ValueError("Unknown checks {}; choose from {}".format(unknown, ", ".join(ALL_CHECKS)))

    ideal = edge_ideal(graph)
    vertex_roles = roles(graph)
    parts = []
    if "oracle" in checks:
        if ideal.is_zero:
            parts.append(
                VerificationReport("", field.p, (ResultsGenerator.create_not_applicable("oracle", "non-zero edge ideal"),))
            )
        else:
            parts.append(oracle_compare(ideal, field, cap, taylor_cap, force))
    if "closed" in checks:
        parts.append(combine_reports("", field.p, [check_closed_formulas(graph, field, cap, force)], "closed."))
    if "weight_reduction" in checks:
        for v in graph.vertices:
            if vertex_roles[v].is_sink and not vertex_roles[v].is_trivial:
                parts.append(
                    combine_reports("", field.p, [check_weight_reduction(graph, v, field, cap, force)], "v{}.".format(v))
                )
    if "mapping_cone" in checks:
        for v in graph.vertices:
            if vertex_roles[v].is_sink and vertex_roles[v].is_leaf:
                parts.append(
                    combine_reports("", field.p, [check_mapping_cone(graph, v, field, cap, force)], "v{}.".format(v))
                )
    if "induced" in checks and graph.n >= 2:
        for v in graph.vertices:
            subset = [x for x in graph.vertices if x != v]
            parts.append(
                combine_reports(
                    "", field.p, [check_induced_monotonicity(graph, subset, field, cap, force)], "minus_v{}.".format(v)
                )
            )
    return combine_reports(graph.describe(), field.p, parts)
