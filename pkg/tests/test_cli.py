import json
import subprocess
import sys

import pytest

from semistable_rank.cli import demo_checks, run
from semistable_rank.errors import InputError
from semistable_rank.files import graph_to_dict, parse_divisor, parse_graph

BANANA = {"vertices": [{"id": "v", "genus": 1}, {"id": "w"}], "edges": [["v", "w"], ["v", "w"]]}
ELLIPTIC = {"vertices": [{"id": "P", "genus": 1}], "edges": []}
TRIANGLE = {"vertices": [{"id": x} for x in "uvw"], "edges": [["u", "v"], ["v", "w"], ["u", "w"]]}


@pytest.fixture
def write(tmp_path):
    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)

    return _write


def run_json(capsys, argv):
    code = run(argv + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


class TestGraphCommands:
    def test_rank_text(self, write, capsys):
        assert run(["rank", write("g.json", BANANA), write("d.json", {"v": 1, "w": 1})]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_rank_json(self, write, capsys):
        code, out = run_json(capsys, ["rank", write("g.json", BANANA), write("d.json", {"v": 1, "w": 1})])
        assert code == 0
        assert out == {"rank": 1, "witness": {"v": 2, "w": 0}}

    def test_reduce(self, write, capsys):
        code, out = run_json(
            capsys, ["reduce", write("g.json", TRIANGLE), write("d.json", {"v": 1, "w": 1}), "--base", "u"]
        )
        assert code == 0
        assert out["divisor"] == {"u": 2, "v": 0, "w": 0}
        assert out["base_vertex"] == "u"

    def test_reduce_unknown_base(self, write, capsys):
        assert run(["reduce", write("g.json", TRIANGLE), write("d.json", {}), "--base", "x"]) == 2

    def test_equiv(self, write, capsys):
        g = write("g.json", BANANA)
        assert run(["equiv", g, write("a.json", {"v": 1}), write("b.json", {"w": 1})]) == 0
        assert capsys.readouterr().out == "false\n"
        assert run(["equiv", g, write("a.json", {"v": 2}), write("b.json", {"w": 2})]) == 0
        assert capsys.readouterr().out == "true\n"

    def test_rab(self, write, capsys):
        code, out = run_json(capsys, ["rab", write("g.json", ELLIPTIC), write("d.json", {"P": 1})])
        assert code == 0
        assert out == {"r_num": 1, "r_ab_pessimistic": 0, "r_ab_optimistic": 1}

    def test_twists(self, write, capsys):
        code, out = run_json(capsys, ["twists", write("g.json", BANANA), write("d.json", {"v": 2})])
        assert code == 0
        assert out == {"twists": [{"v": 0, "w": -1}, {"v": 0, "w": 0}]}

    def test_twists_none(self, write, capsys):
        assert run(["twists", write("g.json", BANANA), write("d.json", {"v": -1})]) == 0
        assert capsys.readouterr().out == "(none)\n"

    def test_clifford(self, write, capsys):
        code, out = run_json(capsys, ["clifford", write("g.json", BANANA), write("d.json", {})])
        assert code == 0
        assert out["bound"] == 1 and out["branch"] == "graph-clifford"

    def test_clifford_loop_rejected(self, write, capsys):
        g = {"vertices": [{"id": "a", "genus": 1}], "edges": [["a", "a"]]}
        assert run(["clifford", write("g.json", g), write("d.json", {})]) == 2
        assert "loopless" in capsys.readouterr().err

    def test_json_is_deterministic(self, write, capsys):
        argv = ["clifford", write("g.json", BANANA), write("d.json", {"w": 1}), "--format", "json"]
        run(argv)
        first = capsys.readouterr().out
        run(argv)
        assert capsys.readouterr().out == first


class TestBadInput:
    @pytest.mark.parametrize(
        "graph",
        [
            {"vertices": [{"id": "a"}], "edges": [], "colour": "red"},
            {"vertices": [{"id": "a", "weight": 2}]},
            {"vertices": [{"id": "a", "genus": -1}]},
            {"vertices": [{"id": "a"}, {"id": "b"}], "edges": []},
            {"vertices": [{"id": "a"}], "edges": [["a"]]},
            {"edges": []},
            [],
        ],
    )
    def test_graph_rejected(self, graph, write, capsys):
        assert run(["rank", write("g.json", graph), write("d.json", {})]) == 2
        assert capsys.readouterr().err.startswith("error:")

    @pytest.mark.parametrize("divisor", [{"x": 1}, {"v": 1.5}, {"v": True}, [1, 2]])
    def test_divisor_rejected(self, divisor, write, capsys):
        assert run(["rank", write("g.json", BANANA), write("d.json", divisor)]) == 2

    def test_missing_file(self, tmp_path, capsys):
        assert run(["rank", str(tmp_path / "nope.json"), str(tmp_path / "nope2.json")]) == 2

    def test_malformed_json(self, tmp_path, write, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert run(["rank", str(bad), write("d.json", {})]) == 2

    @pytest.mark.parametrize("argv", [[], ["frobnicate"], ["demo", "--verbose"], ["chabauty", "--g", "3"]])
    def test_argparse_errors(self, argv, capsys):
        assert run(argv) == 2

    def test_round_trip(self):
        ac = parse_graph(BANANA)
        assert parse_graph(graph_to_dict(ac)) == ac
        with pytest.raises(InputError):
            parse_divisor({"q": 1}, ac.graph)


class TestChabautyCommand:
    def test_sharp_example(self, capsys):
        assert run(["chabauty", "--g", "3", "--r", "1", "--p", "5", "--n-smooth", "5"]) == 0
        assert capsys.readouterr().out.startswith("bound 7 (stoll_main)")

    def test_json_orders(self, capsys):
        code, out = run_json(
            capsys, ["chabauty", "--g", "3", "--r", "1", "--p", "3", "--n-smooth", "4", "--orders", "1,1"]
        )
        assert code == 0
        assert (out["bound"], out["theorem"], out["orders_bound"]) == (8, "general_delta", 8)

    @pytest.mark.parametrize(
        "extra",
        [["--p", "6"], ["--p", "5", "--orders", "2,1"], ["--p", "5", "--orders", "a"], ["--p", "5", "--e", "0"]],
    )
    def test_input_errors(self, extra, capsys):
        assert run(["chabauty", "--g", "3", "--r", "1", "--n-smooth", "5"] + extra) == 2

    def test_hypothesis_failure(self, capsys):
        assert run(["chabauty", "--g", "3", "--r", "3", "--p", "5", "--n-smooth", "5"]) == 1
        assert "r = 3 >= g = 3" in capsys.readouterr().err


class TestAuditAndDemo:
    def test_rr_audit(self, capsys):
        code, out = run_json(capsys, ["rr-audit", "--seed", "3", "--count", "40"])
        assert code == 0
        assert out == {"seed": 3, "checked": 40, "failures": []}

    def test_demo(self, capsys):
        assert run(["demo"]) == 0
        assert capsys.readouterr().out.count("[PASS]") == len(demo_checks()) == 3

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "semistable_rank", "demo", "--format", "json"],
            capture_output=True,
            text=True,
            check=False,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["passed"] is True
