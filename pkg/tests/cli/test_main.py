"""
betti-utilities - tests/cli/test_main.py

Licensed under the MIT License.
"""
import pytest

from betti_utils.cli.graph_file import parse_graph_file
from betti_utils.cli.main import EXIT_ERROR, EXIT_FAIL, EXIT_OK, main
from betti_utils.verify.verification_report import ResultsGenerator, VerificationReport
from tests.conftest import EXAMPLE_DIAGRAM


@pytest.fixture(autouse=True)
def isolated_directory(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def test_compute_diagram(example_graph_file, capsys):
    assert main(["compute", example_graph_file]) == EXIT_OK
    assert capsys.readouterr().out == EXAMPLE_DIAGRAM


def test_compute_is_deterministic(example_graph_file, capsys):
    main(["compute", example_graph_file, "--n-jobs", "2"])
    first = capsys.readouterr().out
    main(["compute", example_graph_file])
    assert capsys.readouterr().out == first


def test_compute_records(example_graph_file, capsys):
    assert main(["compute", example_graph_file, "--view", "graded"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "beta 0 0 1"
    assert "beta 4 8 1" in lines

    assert main(["compute", example_graph_file, "--view", "multigraded", "--convention", "ideal"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert "beta 3 1,3,2,1,1 1" in lines
    assert len(lines) == 15

    assert main(["compute", example_graph_file, "--view", "totals"]) == EXIT_OK
    assert capsys.readouterr().out == "total 0 1\ntotal 1 4\ntotal 2 6\ntotal 3 4\ntotal 4 1\n"


def test_verify(example_graph_file, capsys):
    assert main(["verify", example_graph_file, "--checks", "oracle,closed"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "PASS oracle" in out
    assert out.endswith("overall: PASS\n")


def test_family_round_trip(capsys):
    assert main(["family", "path", "--n", "4", "--weights", "1,2,2,3", "--orient", "+,-,+"]) == EXIT_OK
    graph = parse_graph_file(capsys.readouterr().out)
    assert graph.edges == ((1, 2), (2, 3), (4, 3))
    assert graph.weights == (1, 2, 2, 1)


def test_family_rooted_tree(capsys):
    assert main(["family", "rooted_tree", "--n", "3", "--weights", "1,2,2", "--parents", "0,1,1"]) == EXIT_OK
    assert parse_graph_file(capsys.readouterr().out).edges == ((1, 2), (1, 3))


def test_oracle(example_graph_file, capsys):
    assert main(["oracle", example_graph_file]) == EXIT_OK
    assert main(["oracle", "--random", "5", "--seed", "4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "ideal5.oracle" in out
    assert "seed 4" in out


def test_explore(tmp_path, capsys):
    output = tmp_path / "found"
    code = main(["explore", "--question", "weight-reduction", "--max-n", "3", "--max-weight", "3",
                 "--output-dir", str(output)])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "question: weight-reduction" in out
    for path in output.iterdir():
        parse_graph_file(path.read_text())


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "missing.graph"],
        ["compute", "{graph}", "--field", "4"],
        ["compute", "{graph}", "--convention", "ideal"],
        ["compute", "{graph}", "--n-jobs", "0"],
        ["oracle"],
        ["family", "cycle", "--n", "2"],
        ["explore", "--question", "underlying-graph", "--max-n", "7"],
        ["verify", "{graph}", "--checks", "nonsense"],
        ["frobnicate"],
    ],
)
def test_errors_exit_with_2(argv, example_graph_file, capsys):
    argv = [a.format(graph=example_graph_file) for a in argv]
    assert main(argv) == EXIT_ERROR


def test_bad_graph_file_reports_line(tmp_path, capsys):
    path = tmp_path / "loop.graph"
    path.write_text("vertices 2\nedge 1 1\n")
    assert main(["compute", str(path)]) == EXIT_ERROR
    assert "line 2" in capsys.readouterr().err


def test_cap_exceeded(tmp_path, capsys):
    path = tmp_path / "big.graph"
    path.write_text("vertices 20\n" + "".join("edge {} {}\n".format(v, v + 1) for v in range(1, 20)))
    assert main(["compute", str(path)]) == EXIT_ERROR
    assert "2^19" in capsys.readouterr().err


def test_failing_verification_exits_with_1(example_graph_file, monkeypatch, capsys):
    def failing(*args, **kwargs):
        return VerificationReport("x", 32003, (ResultsGenerator.create_comparison("forced", 1, 2),))

    monkeypatch.setattr("betti_utils.cli.main.verify_graph", failing)
    assert main(["verify", example_graph_file]) == EXIT_FAIL
    assert "FAIL forced" in capsys.readouterr().out
