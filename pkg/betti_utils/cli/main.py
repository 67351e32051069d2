"""
betti-utilities - cli/main.py

Command line entry point:

    betti-utils compute D.graph --view diagram
    betti-utils verify D.graph --checks oracle,closed
    betti-utils family path --n 4 --weights 1,2,2,3
    betti-utils oracle --random 200
    betti-utils explore --question weight-reduction --max-n 4 --max-weight 3

Exit status is 0 on success, 1 when a verification fails, 2 on usage, parse, validation or
cap errors.

Licensed under the MIT License.
"""
import argparse
import logging
import os
import sys
from typing import List, Optional, Sequence

import numpy as np

from betti_utils.betti.betti_table import (
    BettiTable,
    Convention,
    graded_view,
    render_diagram,
    to_quotient,
    total_view,
)
from betti_utils.betti.upper_koszul import multigraded_betti
from betti_utils.cli.explore import ExperimentBounds, Question, run_explore
from betti_utils.cli.graph_file import read_graph_file, render_graph_file
from betti_utils.configuration.project_configuration import project_configuration_file
from betti_utils.configuration.settings import BettiSettings, load_settings
from betti_utils.graph.families import NATURAL, FamilyKind, family
from betti_utils.homology.field_linear_algebra import FieldSpec
from betti_utils.ideal.monomial_ideal import edge_ideal, random_monomial_ideal
from betti_utils.verify.checks import ALL_CHECKS, verify_graph
from betti_utils.verify.taylor import oracle_compare
from betti_utils.verify.verification_report import combine_reports, dump_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

VIEWS = ("diagram", "graded", "multigraded", "totals")


class UsageError(ValueError):
    """ Flag combination the parser cannot reject on its own """


def _csv_integers(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got {!r}".format(text))


def _csv_checks(text: str) -> List[str]:
    names = [token.strip() for token in text.split(",") if token.strip()]
    unknown = [name for name in names if name not in ALL_CHECKS]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            "unknown checks {}; choose from {}".format(unknown, ",".join(ALL_CHECKS))
        )
    return names


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=project_configuration_file, help="Project configuration file")
    common.add_argument("--field", type=int, help="Prime p of the coefficient field GF(p)")
    common.add_argument("--seed", type=int, help="Seed for randomized commands")
    common.add_argument("--n-jobs", dest="n_jobs", type=int, help="joblib workers, 1 runs in process")
    common.add_argument("--force-cap", dest="force_cap", action="store_true", help="Ignore generator caps and explore guards")
    common.add_argument("--quiet", "-q", action="store_true", help="Only log errors")
    common.add_argument("--verbose", "-v", action="store_true", help="Log debug output and show passing check values")

    parser = argparse.ArgumentParser(
        prog="betti-utils", description="Betti numbers of edge ideals of weighted oriented graphs"
    )
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    compute = commands.add_parser("compute", parents=[common], help="Betti table of a graph file")
    compute.add_argument("graph_file", help="Graph file")
    compute.add_argument("--view", choices=VIEWS, default="diagram")
    compute.add_argument("--convention", choices=[c.value for c in Convention], default=Convention.quotient.value)

    verify = commands.add_parser("verify", parents=[common], help="Run recursions and closed formulas on a graph file")
    verify.add_argument("graph_file", help="Graph file")
    verify.add_argument("--checks", type=_csv_checks, default=list(ALL_CHECKS), help=",".join(ALL_CHECKS))

    family_parser = commands.add_parser("family", parents=[common], help="Emit a graph file of a standard family")
    family_parser.add_argument("kind", choices=[k.value for k in FamilyKind])
    family_parser.add_argument("--n", type=int, required=True, help="Vertex count")
    family_parser.add_argument("--weights", type=_csv_integers, help="One weight per vertex")
    family_parser.add_argument("--orient", default=NATURAL, help="natural or one +/- per edge")
    family_parser.add_argument("--parents", type=_csv_integers, help="rooted_tree parent array, 0 for the root")

    oracle = commands.add_parser("oracle", parents=[common], help="Compare against the Taylor complex")
    oracle.add_argument("graph_file", nargs="?", help="Graph file")
    oracle.add_argument("--random", type=int, metavar="COUNT", help="Check COUNT seeded random monomial ideals instead")

    explore = commands.add_parser("explore", parents=[common], help="Exhaustive small graph experiments")
    explore.add_argument("--question", choices=[q.value for q in Question], required=True)
    explore.add_argument("--max-n", dest="max_n", type=int, help="Largest vertex count")
    explore.add_argument("--max-weight", dest="max_weight", type=int, help="Largest weight")
    explore.add_argument("--output-dir", dest="output_dir", help="Write counterexample graph files here")
    explore.add_argument("--progress", action="store_true", help="Show a progress bar")
    return parser


def _records(table: BettiTable, view: str) -> str:
    if view == "multigraded":
        lines = [
            "beta {} {} {}".format(i, ",".join(str(e) for e in b), value) for (i, b), value in table.entries.items()
        ]
    elif view == "graded":
        lines = ["beta {} {} {}".format(i, j, value) for (i, j), value in graded_view(table).items()]
    else:
        lines = ["total {} {}".format(i, value) for i, value in total_view(table).items()]
    return "".join(line + "\n" for line in lines)


def _compute(args, settings: BettiSettings, field: FieldSpec) -> int:
    convention = Convention(args.convention)
    if args.view == "diagram" and convention != Convention.quotient:
        raise UsageError("The diagram view is drawn for the quotient convention only")
    graph = read_graph_file(args.graph_file)
    table = multigraded_betti(
        edge_ideal(graph), field, cap=settings.lcm_generator_cap, force=args.force_cap, n_jobs=settings.n_jobs
    )
    if convention == Convention.quotient:
        table = to_quotient(table)
    sys.stdout.write(render_diagram(table) if args.view == "diagram" else _records(table, args.view))
    return EXIT_OK


def _verify(args, settings: BettiSettings, field: FieldSpec) -> int:
    graph = read_graph_file(args.graph_file)
    report = verify_graph(
        graph,
        field,
        args.checks,
        cap=settings.lcm_generator_cap,
        taylor_cap=settings.taylor_generator_cap,
        force=args.force_cap,
    )
    sys.stdout.write(dump_report(report, verbose=args.verbose))
    return EXIT_OK if report.overall else EXIT_FAIL


def _family(args, settings: BettiSettings, field: FieldSpec) -> int:
    graph = family(args.kind, args.n, args.weights, args.orient, args.parents)
    sys.stdout.write(render_graph_file(graph, "{} n={}".format(args.kind, args.n)))
    return EXIT_OK


def _oracle(args, settings: BettiSettings, field: FieldSpec) -> int:
    if (args.graph_file is None) == (args.random is None):
        raise UsageError("oracle takes either a graph file or --random COUNT")
    caps = dict(lcm_cap=settings.lcm_generator_cap, taylor_cap=settings.taylor_generator_cap, force=args.force_cap)
    if args.graph_file is not None:
        report = oracle_compare(edge_ideal(read_graph_file(args.graph_file)), field, **caps)
    else:
        if args.random < 1:
            raise UsageError("--random needs a positive count")
        rng = np.random.default_rng(settings.seed)
        reports = [
            combine_reports("", field.p, [oracle_compare(random_monomial_ideal(rng), field, **caps)], "ideal{}.".format(k))
            for k in range(1, args.random + 1)
        ]
        report = combine_reports("{} random ideals, seed {}".format(args.random, settings.seed), field.p, reports)
    sys.stdout.write(dump_report(report, verbose=args.verbose))
    return EXIT_OK if report.overall else EXIT_FAIL


def _explore(args, settings: BettiSettings, field: FieldSpec) -> int:
    bounds = ExperimentBounds(
        args.max_n if args.max_n is not None else settings.explore_max_n,
        args.max_weight if args.max_weight is not None else settings.explore_max_weight,
        Question(args.question),
    )
    result = run_explore(
        bounds,
        field,
        n_jobs=settings.n_jobs,
        max_counterexamples=settings.max_counterexamples,
        cap=settings.lcm_generator_cap,
        guard_n=settings.explore_max_n,
        guard_weight=settings.explore_max_weight,
        force=args.force_cap,
        progress=args.progress,
    )
    sys.stdout.write(result.report)
    if args.output_dir:
        os.makedirs(args.output_dir, exist_ok=True)
        for name, text in result.counterexamples:
            with open(os.path.join(args.output_dir, name), "w") as graph_file:
                graph_file.write(text)
        logger.info("Wrote %d counterexamples to %s", len(result.counterexamples), args.output_dir)
    else:
        for name, text in result.counterexamples:
            sys.stdout.write("\n# file: {}\n{}".format(name, text))
    return EXIT_OK


COMMANDS = {
    "compute": _compute,
    "verify": _verify,
    "family": _family,
    "oracle": _oracle,
    "explore": _explore,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, load settings and run one command.

    :param argv: arguments without the program name, default sys.argv[1:]
    :return: exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_ERROR if error.code else EXIT_OK

    level = logging.ERROR if args.quiet else logging.DEBUG if args.verbose else logging.WARNING
    logging.basicConfig(level=level)

    try:
        settings = load_settings(
            args.config, {"field_prime": args.field, "seed": args.seed, "n_jobs": args.n_jobs}
        )
        if not (args.quiet or args.verbose):
            logging.getLogger().setLevel(str(settings.log_level).upper())
        field = FieldSpec(settings.field_prime)
        return COMMANDS[args.command](args, settings, field)
    # BoundsError, CapExceededError, GraphError, GraphFileError, SettingsError and UsageError are ValueErrors
    except (ValueError, OSError) as error:
        print("error: {}".format(error), file=sys.stderr)
        return EXIT_ERROR


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
