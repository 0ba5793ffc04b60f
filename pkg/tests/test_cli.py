import json

import pytest

from rvlab.cli import main
from rvlab.formulas import CnfFormula, dumps_dimacs
from rvlab.graph import ColoredGraph, Graph
from rvlab.io import dumps, read_rvgraph
from rvlab.solvers import is_vertex_rainbow_path

SAT_CNF = dumps_dimacs(CnfFormula(3, [(1, 2, -3), (-2, 3)]))
# unsatisfiable, yet stable under unit propagation (no unit clauses arise)
UNSAT_CNF = dumps_dimacs(CnfFormula(5, [
    (2, 3), (4, -3), (-4, -1), (-1, -5, -3), (-2, -5), (-2, 5), (-4, 1),
]))


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def path_colored_file(tmp_path, colors, name="g.rvg"):
    n = len(colors)
    cg = ColoredGraph(Graph(n, [(i, i + 1) for i in range(n - 1)]), colors)
    return write(tmp_path, name, dumps(cg))


class TestGenSolve:
    def test_gen_then_solve_sat_formula(self, tmp_path, capsys):
        cnf = write(tmp_path, "f.cnf", SAT_CNF)
        out = str(tmp_path / "g.rvg")
        roles = str(tmp_path / "roles.json")
        assert main(["gen", cnf, "--family", "bip-planar", "-o", out,
                     "--roles", roles]) == 0
        parsed = read_rvgraph(out)
        assert parsed.kind == "vertex"
        assert parsed.roles == json.loads(open(roles).read())
        assert main(["solve", out, "--variant", "rvc"]) == 0
        assert main(["solve", out, "--variant", "srvc", "--engine", "generic"]) == 0
        captured = capsys.readouterr()
        assert "CONNECTED" in captured.out

    def test_gen_unsat_solves_to_exit_1(self, tmp_path):
        cnf = write(tmp_path, "f.cnf", UNSAT_CNF)
        out = str(tmp_path / "g.rvg")
        assert main(["gen", cnf, "--family", "bip-planar", "-o", out]) == 0
        assert main(["solve", out, "--variant", "rvc", "--engine", "generic"]) == 1

    def test_gen_is_deterministic(self, tmp_path):
        cnf = write(tmp_path, "f.cnf", SAT_CNF)
        out1, out2 = str(tmp_path / "a.rvg"), str(tmp_path / "b.rvg")
        main(["gen", cnf, "--family", "cubic", "-o", out1])
        main(["gen", cnf, "--family", "cubic", "-o", out2])
        assert open(out1).read() == open(out2).read()

    def test_solve_p4_bad_coloring_exit_1(self, tmp_path):
        graph = path_colored_file(tmp_path, [0, 1, 1, 0])
        assert main(["solve", graph, "--variant", "rvc"]) == 1

    def test_witness_file_is_line_json_and_validates(self, tmp_path):
        graph = path_colored_file(tmp_path, [0, 1, 2, 0])
        witness = str(tmp_path / "w.json")
        assert main(["solve", graph, "--variant", "rvc", "--engine", "generic",
                     "--witness", witness]) == 0
        parsed = read_rvgraph(graph)
        lines = [json.loads(line) for line in open(witness)]
        assert len(lines) == 6  # all pairs of a P4
        for entry in lines:
            s, t = entry["pair"]
            path = entry["path"]
            assert path[0] == s and path[-1] == t
            assert is_vertex_rainbow_path(parsed.vertex_colored, path)

    def test_witness_deterministic(self, tmp_path):
        graph = path_colored_file(tmp_path, [0, 1, 2, 0])
        w1, w2 = str(tmp_path / "w1.json"), str(tmp_path / "w2.json")
        main(["solve", graph, "--variant", "rvc", "--witness", w1])
        main(["solve", graph, "--variant", "rvc", "--witness", w2])
        assert open(w1).read() == open(w2).read()

    def test_engine_choices_agree(self, tmp_path):
        good = path_colored_file(tmp_path, [0, 1, 2, 3, 0], name="good.rvg")
        bad = path_colored_file(tmp_path, [0, 1, 2, 1, 0], name="bad.rvg")
        for engine in ("auto", "generic", "fpt", "brute"):
            assert main(["solve", good, "--variant", "rvc",
                         "--engine", engine]) == 0
            assert main(["solve", bad, "--variant", "rvc",
                         "--engine", engine]) == 1

    def test_variant_mismatch_is_usage_error(self, tmp_path):
        graph = path_colored_file(tmp_path, [0, 1])
        assert main(["solve", graph, "--variant", "rc"]) == 2

    def test_missing_file_is_io_error(self):
        assert main(["solve", "nope.rvg", "--variant", "rvc"]) == 2


class TestCheckClass:
    def test_member(self, tmp_path, capsys):
        graph = path_colored_file(tmp_path, [0, 1, 0])
        assert main(["check-class", graph, "interval"]) == 0
        assert "MEMBER" in capsys.readouterr().out

    def test_not_member_prints_witness(self, tmp_path, capsys):
        cg = ColoredGraph(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), [0] * 4)
        graph = write(tmp_path, "c4.rvg", dumps(cg))
        assert main(["check-class", graph, "chordal"]) == 1
        out = capsys.readouterr().out
        assert "NOT-MEMBER" in out and "witness" in out

    def test_generated_family_is_certified(self, tmp_path, capsys):
        cnf = write(tmp_path, "f.cnf", SAT_CNF)
        out = str(tmp_path / "g.rvg")
        main(["gen", cnf, "--family", "proper-interval", "-o", out])
        assert main(["check-class", out, "proper-interval"]) == 0


class TestVerifyReductionCommand:
    def test_certified(self, tmp_path, capsys):
        cnf = write(tmp_path, "f.cnf", SAT_CNF)
        assert main(["verify-reduction", cnf, "--family", "bip-planar"]) == 0
        cert = json.loads(capsys.readouterr().out)
        assert cert["equivalent"] and cert["satisfiable"]

    def test_unsat_formula_still_certifies(self, tmp_path, capsys):
        cnf = write(tmp_path, "f.cnf", UNSAT_CNF)
        assert main(["verify-reduction", cnf, "--family", "bip-planar"]) == 0
        cert = json.loads(capsys.readouterr().out)
        assert cert["equivalent"] and not cert["satisfiable"]

    def test_k_flag_validation(self, tmp_path):
        cnf = write(tmp_path, "f.cnf", SAT_CNF)
        assert main(["verify-reduction", cnf, "--family", "regular"]) == 2
        assert main(["verify-reduction", cnf, "--family", "cubic", "--k", "4"]) == 2


class TestBench:
    @pytest.mark.parametrize("suite", ["block", "cactus", "split", "fpt"])
    def test_suite_runs_and_agrees(self, suite, capsys):
        assert main(["bench", "--suite", suite, "--sizes", "6,9",
                     "--count", "3", "--seed", "7"]) == 0
        out = capsys.readouterr().out
        lines = out.strip().splitlines()
        assert lines[0].startswith("suite\t")
        assert len(lines) == 1 + 2 * 3
        for line in lines[1:]:
            fields = line.split("\t")
            assert fields[7] == "true"  # agreement column

    def test_bench_verdicts_deterministic(self, capsys):
        main(["bench", "--suite", "cactus", "--sizes", "8", "--count", "2",
              "--seed", "3"])
        first = [line.split("\t")[:8] for line
                 in capsys.readouterr().out.splitlines()]
        main(["bench", "--suite", "cactus", "--sizes", "8", "--count", "2",
              "--seed", "3"])
        second = [line.split("\t")[:8] for line
                  in capsys.readouterr().out.splitlines()]
        assert first == second


class TestUsage:
    def test_unknown_command(self):
        assert main(["frobnicate"]) == 2

    def test_missing_required_flag(self):
        assert main(["solve"]) == 2
