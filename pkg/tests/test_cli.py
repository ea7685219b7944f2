"""
命令列介面

    - analyze / dimk / basis / sweep / verify 的輸出內容
    - 結束碼：2 語法，3 k 過大或不連通，4 超出節點預算
    - CSV 標頭、--output 與 KMETRIC_NODE_BUDGET
"""

import json

import pytest

import kmetric


def run_json(capsys, *argv):
    code = kmetric.main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestAnalyze:
    def test_wheel(self, capsys):
        code, doc = run_json(capsys, "analyze", "W9")
        assert code == 0
        assert doc["schema_version"] == 1
        assert doc["dimensional_k"] == 4
        assert doc["order"] == 10

    def test_path(self, capsys):
        code, doc = run_json(capsys, "analyze", "P4")
        assert doc["dimensional_k"] == 3
        assert doc["girth"] is None
        assert doc["twin_pairs"] == []

    def test_complete_graph_twins(self, capsys):
        code, doc = run_json(capsys, "analyze", "K5")
        assert len(doc["twin_pairs"]) == 10
        assert doc["dimensional_k"] == 2

    def test_csv_header(self, capsys):
        assert kmetric.main(["analyze", "C5", "--format", "csv"]) == 0
        header, row, _ = capsys.readouterr().out.split("\n")
        assert header == "graph,order,size,dimensional_k,twin_pairs,c_of_h,diameter,girth,min_degree,max_degree,regular"
        assert row.startswith("C5,5,5,")

    def test_text_output(self, capsys):
        assert kmetric.main(["analyze", "Petersen"]) == 0
        assert "Petersen" in capsys.readouterr().out

    def test_disconnected(self, capsys, tmp_path):
        edges = tmp_path / "two.txt"
        edges.write_text("4 2\n0 1\n2 3\n", encoding="utf-8")
        assert kmetric.main(["analyze", f"@{edges}"]) == 3


class TestDimK:
    def test_fan_range(self, capsys):
        code, doc = run_json(capsys, "dimk", "F10", "--k", "1..3")
        assert code == 0
        assert [row["dim_k"] for row in doc["rows"]] == [4, 6, 9]
        assert all(row["proof"] == "Exact" for row in doc["rows"])

    def test_corona(self, capsys):
        code, doc = run_json(capsys, "dimk", "corona(P2;P4,P4)", "--k", "3")
        assert doc["rows"] == [{"k": 3, "dim_k": 8, "nodes_explored": doc["rows"][0]["nodes_explored"], "proof": "Exact"}]

    def test_k2_takes_both(self, capsys):
        code, doc = run_json(capsys, "dimk", "K2", "--k", "2")
        assert doc["rows"][0]["dim_k"] == 2

    def test_default_range_is_one_to_k_max(self, capsys):
        code, doc = run_json(capsys, "dimk", "P4")
        assert [row["k"] for row in doc["rows"]] == [1, 2, 3]

    def test_timing_column(self, capsys):
        assert kmetric.main(["dimk", "P3", "--k", "1", "--format", "csv", "--timing"]) == 0
        header = capsys.readouterr().out.split("\n")[0]
        assert header == "k,dim_k,nodes_explored,proof,wall_seconds"

    def test_k_too_large(self, capsys):
        assert kmetric.main(["dimk", "P4", "--k", "4"]) == 3

    def test_parse_error(self, capsys):
        assert kmetric.main(["dimk", "X4"]) == 2

    def test_k_zero(self, capsys):
        assert kmetric.main(["dimk", "P4", "--k", "0"]) == 2


class TestBasis:
    def test_path_end(self, capsys):
        code, doc = run_json(capsys, "basis", "P3", "--k", "1")
        assert doc["results"][0]["bases"][0]["vertices"] == [0]

    def test_wheel_rim(self, capsys):
        code, doc = run_json(capsys, "basis", "W7", "--k", "4")
        assert doc["results"][0]["bases"][0]["vertices"] == list(range(1, 8))

    def test_corona_avoids_base(self, capsys):
        code, doc = run_json(capsys, "basis", "corona(P2;K2,K2)", "--k", "2")
        vertices = doc["results"][0]["bases"][0]["vertices"]
        assert not set(vertices) & {0, 1}
        assert len(vertices) == 4

    def test_all_lists_several(self, capsys):
        code, doc = run_json(capsys, "basis", "C5", "--k", "1", "--all", "3")
        bases = [item["vertices"] for item in doc["results"][0]["bases"]]
        assert bases == [[0, 1], [0, 2], [0, 3]]

    def test_audit(self, capsys):
        code, doc = run_json(capsys, "basis", "P4", "--k", "2", "--audit")
        audit = doc["results"][0]["audit"]
        assert len(audit) == 6
        assert all(row["ok"] for row in audit)

    def test_csv(self, capsys):
        assert kmetric.main(["basis", "P3", "--k", "1", "--format", "csv"]) == 0
        assert capsys.readouterr().out == "k,dim_k,index,witness,labels\n1,1,0,0,0\n"

    def test_node_budget(self, capsys):
        assert kmetric.main(["basis", "F10", "--k", "2", "--node-budget", "1"]) == 4

    def test_node_budget_from_env(self, capsys, monkeypatch):
        monkeypatch.setenv("KMETRIC_NODE_BUDGET", "1")
        assert kmetric.main(["basis", "F10", "--k", "2"]) == 4

    def test_bad_env_value(self, capsys, monkeypatch):
        monkeypatch.setenv("KMETRIC_NODE_BUDGET", "many")
        assert kmetric.main(["dimk", "P3"]) == 2


class TestTheorems:
    def test_sweep_wheel(self, capsys):
        code, doc = run_json(capsys, "sweep", "WheelDim3", "--n", "7..12")
        assert code == 0
        assert doc["summary"]["totals"]["Confirmed"] == 6
        assert doc["summary"]["violations"] == 0

    def test_sweep_twin_equality(self, capsys):
        code, doc = run_json(capsys, "sweep", "TwinDim2Equality", "--base", "P3", "--attach", "K2,K3,K2")
        report = doc["reports"][0]
        assert report["verdict"] == "Confirmed"
        assert report["observed"] == 7

    def test_sweep_unknown_theorem(self, capsys):
        assert kmetric.main(["sweep", "NoSuchTheorem", "--n", "7"]) == 2

    def test_sweep_csv_header(self, capsys):
        assert kmetric.main(["sweep", "FanDim2", "--n", "6..7", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.split("\n")
        assert lines[0].startswith("theorem,instance,k,")
        assert len(lines) == 4

    def test_verify_only(self, capsys):
        code, doc = run_json(capsys, "verify", "--only", "FanDim2", "--only", "WheelDim2")
        assert code == 0
        assert set(doc["summary"]["per_theorem"]) == {"FanDim2", "WheelDim2"}
        assert "seed" not in doc

    def test_verify_random_records_seed(self, capsys):
        code, doc = run_json(capsys, "verify", "--only", "FanDim1", "--random", "2", "--seed", "11")
        assert code == 0
        assert doc["seed"] == 11

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "sweep.json"
        assert kmetric.main(["sweep", "FanDim3", "--n", "6..8", "--format", "json", "--output", str(target)]) == 0
        assert capsys.readouterr().out == ""
        doc = json.loads(target.read_text(encoding="utf-8"))
        assert doc["command"] == "sweep"
        assert len(doc["reports"]) == 3

    @pytest.mark.slow
    def test_verify_far_attachments(self, capsys):
        code, doc = run_json(capsys, "verify", "--only", "Diam6Equality")
        assert code == 0
        assert any(r["instance"] == "corona(P2; C7)" for r in doc["reports"])


class TestUsage:
    def test_no_command(self, capsys):
        assert kmetric.main([]) == 2

    def test_argparse_error_exits_two(self, capsys):
        with pytest.raises(SystemExit) as info:
            kmetric.main(["dimk"])
        assert info.value.code == 2
