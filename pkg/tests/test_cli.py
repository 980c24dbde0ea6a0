import json

import pytest

from twocs import emit_graph6, parse_graph6, parse_partition, check_partition, Mode
from twocs.cli import main

@pytest.fixture
def g10_file(tmp_path, g10):
    path = tmp_path / "g10.g6"
    path.write_text(emit_graph6(g10) + "\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCheck:
    def test_valid(self, capsys):
        code, out, _ = run(capsys, "check", "--graph6", "C~",
                           "--partition", "0,1|2,3")
        assert code == 0 and out.strip() == "valid"

    def test_g10_witness(self, capsys, g10_file):
        code, out, _ = run(capsys, "check", "--in", g10_file,
                           "--partition", "0,1,2,3,4,5,7|6,8,9", "--json")
        assert code == 1
        payload = json.loads(out)
        w = payload["witness"]
        assert (w["vertex"], w["lhs"], w["rhs"]) == (0, 9, 12)

    def test_malformed_partition(self, capsys):
        code, _, err = run(capsys, "check", "--graph6", "C~",
                           "--partition", "0,1|1,2,3")
        assert code == 2 and "error" in err


class TestSolve:
    def test_c5_found(self, capsys):
        # C5 as graph6: n=5, edges of the 5-cycle
        from .conftest import cycle_graph
        line = emit_graph6(cycle_graph(5))
        code, out, _ = run(capsys, "solve", "--graph6", line)
        assert code == 0 and out.startswith("FOUND")
        parts = out.split()[1]
        p = parse_partition(parts, 5)
        assert check_partition(cycle_graph(5), p, Mode.STRICT).valid

    def test_g10_none(self, capsys, g10_file):
        code, out, _ = run(capsys, "solve", "--in", g10_file, "--mode", "relaxed")
        assert code == 1 and out.strip() == "NONE"

    def test_budget(self, capsys, g10_file):
        code, out, _ = run(capsys, "solve", "--in", g10_file,
                           "--mode", "relaxed", "--budget", "10")
        assert code == 3 and "BUDGET_EXCEEDED" in out

    def test_json_round_trip(self, capsys, k4):
        code, out, _ = run(capsys, "solve", "--graph6", emit_graph6(k4), "--json")
        payload = json.loads(out)
        p = parse_partition(payload["partition"], 4)
        assert check_partition(k4, p, Mode.STRICT).valid


class TestTree:
    def test_path(self, capsys):
        from .conftest import path_graph
        code, out, _ = run(capsys, "tree", "--graph6", emit_graph6(path_graph(4)))
        assert code == 0 and "0,1|2,3" in out

    def test_star_none(self, capsys):
        from .conftest import star_graph
        code, out, _ = run(capsys, "tree", "--graph6", emit_graph6(star_graph(3)))
        assert code == 1


class TestFamily:
    def test_enumerate_k3(self, capsys):
        code, out, _ = run(capsys, "family", "enumerate", "--k", "3")
        assert code == 0
        lines = [l for l in out.splitlines() if l and not l.startswith("{")]
        assert len(lines) == 4

    def test_build_fig_member(self, capsys, g10):
        from twocs import are_isomorphic
        code, out, _ = run(capsys, "family", "build", "--k", "3", "--dx", "1",
                           "--dy", "2", "--o1", "1", "--o2", "1")
        assert code == 0
        g = parse_graph6(out.splitlines()[0])
        assert are_isomorphic(g, g10)
        roles = json.loads(out.splitlines()[1])
        assert sorted(roles.values()).count("W1") == 3

    def test_build_edges_format_with_roles(self, capsys):
        code, out, _ = run(capsys, "family", "build", "--k", "3", "--dx", "1",
                           "--dy", "2", "--o1", "1", "--o2", "0",
                           "--out-format", "edges", "--json")
        payload = json.loads(out)
        assert payload["roles"]["9"] == "z"

    def test_verify_k4(self, capsys):
        code, out, _ = run(capsys, "family", "verify", "--k", "4", "--json")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 15
        for line in lines:
            assert json.loads(line)["outcome"] == "none"

    def test_invalid_params_exit2(self, capsys):
        code, _, err = run(capsys, "family", "build", "--k", "3", "--dx", "1",
                           "--dy", "1", "--o1", "1", "--o2", "1")
        assert code == 2 and "d_y" in err


class TestCensus:
    def test_generate_5(self, capsys, tmp_path):
        rec = tmp_path / "records.jsonl"
        code, out, err = run(capsys, "census", "--generate", "5",
                             "--records", str(rec))
        assert code == 0
        summary = json.loads(out)
        assert summary["per_order"]["5"]["total"] == 21
        assert summary["per_order"]["5"]["lacking_strict"] == 1
        assert summary["per_order"]["5"]["lacking_relaxed"] == 0
        assert len(rec.read_text().splitlines()) == 21

    def test_missing_file_exit2(self, capsys):
        code, _, err = run(capsys, "census", "--in", "/nonexistent/file.g6")
        assert code == 2

    def test_needs_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "census")
        assert code == 2

    def test_file_input(self, capsys, g10_file):
        code, out, err = run(capsys, "census", "--in", g10_file)
        assert code == 0
        summary = json.loads(out)
        assert summary["ids_lacking_relaxed"] == [1]
        assert "lacking a relaxed" in err
