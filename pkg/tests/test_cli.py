"""Command-line interface: golden output, determinism and exit codes."""

import pytest

from qcgraph.cli import run
from qcgraph.graph import format_graph
from suitegraphs import dumbbell, gamma1, theta

THETA_ENUMERATE = """\
0\t0\t0
0\t1\t1
0\t2\t2
1\t0\t1
1\t1\t0
1\t1\t2
1\t2\t1
2\t0\t2
2\t1\t1
2\t2\t0
"""


@pytest.fixture
def graph_file(tmp_path):
    def write(graph, boundary=None, name="g.txt"):
        path = tmp_path / name
        path.write_text(format_graph(graph, boundary or {}))
        return str(path)

    return write


def run_capture(args, capsys):
    code = run(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGolden:
    def test_enumerate_theta(self, graph_file, capsys):
        path = graph_file(theta())
        code, out, _ = run_capture(["enumerate", "--graph", path, "--level", "2"], capsys)
        assert code == 0
        assert out == THETA_ENUMERATE

    def test_cohomology_theta(self, graph_file, capsys):
        path = graph_file(theta())
        code, out, _ = run_capture(["cohomology", "--graph", path, "--level", "2"], capsys)
        assert code == 0
        assert out.splitlines()[0] == "order 8"

    def test_oracle_count_matches(self, graph_file, capsys):
        path = graph_file(theta())
        code, out, _ = run_capture(["oracle-count", "--graph", path, "--level", "2"], capsys)
        assert code == 0
        assert out == "classes 8\n"

    def test_ext_cocycle_dumbbell(self, graph_file, capsys):
        path = graph_file(dumbbell())
        code, out, _ = run_capture(
            ["ext-cocycle", "--graph", path, "--level", "4"], capsys
        )
        assert code == 0
        assert "1/2" in out  # the -1 entries at the doubly-fixed weight
        assert "target 1/2" in out

    def test_orbits_dumbbell(self, graph_file, capsys):
        path = graph_file(dumbbell())
        code, out, _ = run_capture(["orbits", "--graph", path, "--level", "4"], capsys)
        assert code == 0
        assert "orbit 2,2,2 size 1 stabilizer [a;b]" in out

    def test_output_file(self, graph_file, capsys, tmp_path):
        path = graph_file(theta())
        dest = tmp_path / "out.txt"
        code, out, _ = run_capture(
            ["enumerate", "--graph", path, "--level", "2", "--output", str(dest)],
            capsys,
        )
        assert code == 0 and out == ""
        assert dest.read_text() == THETA_ENUMERATE

    def test_byte_identical_across_runs(self, graph_file, capsys):
        path = graph_file(dumbbell())
        outs = set()
        for _ in range(3):
            _, out, _ = run_capture(
                ["ext-cocycle", "--graph", path, "--level", "4"], capsys
            )
            outs.add(out)
        assert len(outs) == 1


class TestExitCodes:
    def test_verify_parity_pass(self, graph_file, capsys):
        path = graph_file(gamma1(), {"w1": 2})
        code, out, _ = run_capture(
            ["verify-parity", "--graph", path, "--level", "4"], capsys
        )
        assert code == 0
        assert all(line.startswith("PASS") for line in out.splitlines())

    def test_verify_functorial_pass(self, graph_file, capsys):
        path = graph_file(dumbbell())
        code, out, _ = run_capture(
            ["verify-functorial", "--graph", path, "--level", "4"], capsys
        )
        assert code == 0 and out == "PASS\n"

    def test_cap_exceeded_is_input_error(self, graph_file, capsys):
        path = graph_file(dumbbell())
        code, _, err = run_capture(
            ["verify-functorial", "--graph", path, "--level", "4", "--cap", "1"],
            capsys,
        )
        assert code == 2 and "error:" in err

    def test_missing_file(self, capsys):
        code, _, err = run_capture(
            ["enumerate", "--graph", "/nonexistent", "--level", "2"], capsys
        )
        assert code == 2 and "error:" in err

    def test_bad_level(self, graph_file, capsys):
        path = graph_file(theta())
        code, _, err = run_capture(["enumerate", "--graph", path, "--level", "0"], capsys)
        assert code == 2 and "error:" in err

    def test_unknown_command(self, capsys):
        code, _, _ = run_capture(["frobnicate", "--graph", "x", "--level", "2"], capsys)
        assert code == 2

    def test_cut_dumbbell(self, graph_file, capsys):
        path = graph_file(dumbbell())
        code, out, _ = run_capture(
            ["cut", "--graph", path, "--level", "4", "--edges", "c"], capsys
        )
        assert code == 0
        assert "pair c c:w1 c:w2" in out
        assert out.count("component") == 2
