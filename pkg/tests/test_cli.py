"""End-to-end command tests driving cli.main with argv lists."""
import json
import subprocess
import sys

import pytest

from ofnring import parse_expression
from ofnring.cli import main
from ofnring.documents import ofn_from_doc


def write_doc(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc), encoding="utf-8")
    return str(p)


TYPE_II_DOC = {"base": "identity", "tuple": [1, 2, 1, 0]}
PROPER_DOC = {"base": "identity", "tuple": [1, 0, -1, 2]}


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def test_eval_prints_document_and_sides(capsys):
    rc = main(["eval", "--expr", "trap(1,-5,-1,-3) + trap(1,5,-1,3)"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0]) == {"base": "identity",
                                    "tuple": [2.0, 0.0, -2.0, 0.0]}
    assert lines[1] == "sides: (2x, -2x)"


def test_eval_document_round_trips(capsys):
    expr = "gauss(0.25,1,-0.25,2) * crisp(4)"
    rc = main(["eval", "--expr", expr])
    assert rc == 0
    line = capsys.readouterr().out.splitlines()[0]
    assert ofn_from_doc(json.loads(line)) == parse_expression(expr)


def test_eval_parse_error_is_exit_2(capsys):
    assert main(["eval", "--expr", "trap(1,2)"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_eval_mixed_bases_is_exit_3():
    assert main(["eval", "--expr", "trap(1,0,-1,2) + gauss(1,0,-1,2)"]) == 3


def test_eval_division_by_zero_is_exit_4():
    assert main(["eval", "--expr", "trap(1,0,-1,2) / crisp(0)"]) == 4


# ---------------------------------------------------------------------------
# classify / correct
# ---------------------------------------------------------------------------

def test_classify_reports_pathology(tmp_path, capsys):
    path = write_doc(tmp_path, "x.json", TYPE_II_DOC)
    assert main(["classify", "--in", path]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep == {"proper": False, "orientation": "decreasing",
                   "same_sign": True, "crossing": False,
                   "pathology": "type-ii"}


def test_classify_proper_document(tmp_path, capsys):
    path = write_doc(tmp_path, "x.json", PROPER_DOC)
    assert main(["classify", "--in", path]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["proper"] is True
    assert rep["pathology"] == "none"


def test_correct_repairs_and_labels(tmp_path, capsys):
    path = write_doc(tmp_path, "x.json", TYPE_II_DOC)
    assert main(["correct", "--in", path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"result": {"base": "identity", "tuple": [0.0, 2.0, 1.0, 0.0]},
                   "applied": "ii"}


def test_correct_leaves_proper_alone(tmp_path, capsys):
    path = write_doc(tmp_path, "x.json", PROPER_DOC)
    assert main(["correct", "--in", path]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["applied"] == "none"
    assert out["result"] == {"base": "identity", "tuple": [1.0, 0.0, -1.0, 2.0]}


def test_classify_rejects_malformed_documents(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["classify", "--in", str(bad)]) == 2
    schema = write_doc(tmp_path, "schema.json",
                       {"base": "identity", "tuple": [1, 2, 3]})
    assert main(["classify", "--in", schema]) == 2
    assert main(["classify", "--in", str(tmp_path / "absent.json")]) == 5
    capsys.readouterr()


# ---------------------------------------------------------------------------
# sample
# ---------------------------------------------------------------------------

def test_sample_writes_full_precision_csv(tmp_path):
    doc = write_doc(tmp_path, "x.json", {"base": "sqrt", "tuple": [1, 0, -1, 2]})
    out = tmp_path / "rows.csv"
    assert main(["sample", "--in", doc, "--points", "3", "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8") == (
        "alpha,up,down\n"
        "0.0,0.0,2.0\n"
        "0.5,0.7071067811865476,1.2928932188134525\n"
        "1.0,1.0,1.0\n")


def test_sample_unbounded_base_emits_inf_tokens(tmp_path):
    doc = write_doc(tmp_path, "x.json",
                    {"base": "gaussian", "tuple": [1, 0, -1, 2]})
    out = tmp_path / "rows.csv"
    assert main(["sample", "--in", doc, "--points", "5", "--out", str(out)]) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "alpha,up,down"
    assert lines[1] == "0.0,inf,-inf"
    # h(1) = 0 for this base, so the alpha = 1 row is the bare offsets
    assert lines[-1] == "1.0,0.0,2.0"


def test_sample_rectangular_columns_are_constant(tmp_path):
    doc = write_doc(tmp_path, "x.json", {"base": "identity",
                                         "tuple": [0, 1, 0, 2]})
    out = tmp_path / "rows.csv"
    assert main(["sample", "--in", doc, "--points", "4", "--out", str(out)]) == 0
    body = out.read_text(encoding="utf-8").splitlines()[1:]
    assert len(body) == 4
    assert all(row.endswith(",1.0,2.0") for row in body)


def test_sample_needs_two_points(tmp_path, capsys):
    doc = write_doc(tmp_path, "x.json", PROPER_DOC)
    out = tmp_path / "rows.csv"
    assert main(["sample", "--in", doc, "--points", "1", "--out", str(out)]) == 2
    assert not out.exists()
    capsys.readouterr()


def test_sample_unwritable_target_is_exit_5(tmp_path, capsys):
    doc = write_doc(tmp_path, "x.json", PROPER_DOC)
    missing = tmp_path / "no" / "such" / "dir" / "rows.csv"
    assert main(["sample", "--in", doc, "--points", "3",
                 "--out", str(missing)]) == 5
    capsys.readouterr()


# ---------------------------------------------------------------------------
# plot
# ---------------------------------------------------------------------------

def test_plot_writes_self_contained_svg(tmp_path):
    doc = write_doc(tmp_path, "x.json", PROPER_DOC)
    out = tmp_path / "plot.svg"
    assert main(["plot", "--in", doc, "--out", str(out)]) == 0
    svg = out.read_text(encoding="utf-8")
    assert svg.startswith("<svg")
    assert 'viewBox="0 0 640 480"' in svg
    assert svg.count("<polyline") == 2
    assert svg.count("<polygon") >= 4
    assert "href" not in svg and "<image" not in svg
    assert svg.rstrip().endswith("</svg>")


def test_plot_handles_unbounded_bases(tmp_path):
    doc = write_doc(tmp_path, "x.json",
                    {"base": "gaussian", "tuple": [0.25, 1, -0.25, 2]})
    out = tmp_path / "plot.svg"
    assert main(["plot", "--in", doc, "--out", str(out)]) == 0
    svg = out.read_text(encoding="utf-8")
    assert "inf" not in svg.lower().replace("-inf", "")
    assert svg.count("<polyline") == 2


# ---------------------------------------------------------------------------
# graph
# ---------------------------------------------------------------------------

def graph_doc(*edges, nodes=3):
    return {"nodes": nodes,
            "edges": [{"from": u, "to": v, "weight": w} for u, v, w in edges]}


def test_graph_happy_path(tmp_path, capsys):
    doc = graph_doc(
        (0, 1, {"base": "identity", "tuple": [1, 0, -1, 2]}),
        (1, 2, {"base": "identity", "tuple": [1, 1, -1, 3]}),
    )
    path = write_doc(tmp_path, "g.json", doc)
    assert main(["graph", "--edges", path, "--source", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["source"] == 0
    by_node = {row["node"]: row for row in out["nodes"]}
    assert by_node[0]["distance"]["tuple"] == [0.0, 0.0, 0.0, 0.0]
    assert by_node[0]["predecessor"] is None
    assert by_node[2]["distance"] == {"base": "identity",
                                      "tuple": [2.0, 1.0, -2.0, 5.0]}
    assert by_node[2]["predecessor"] == 1


def test_graph_unreachable_node_is_null(tmp_path, capsys):
    doc = graph_doc((0, 1, {"base": "identity", "tuple": [1, 0, -1, 2]}))
    path = write_doc(tmp_path, "g.json", doc)
    assert main(["graph", "--edges", path, "--source", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["nodes"][2]["distance"] is None
    assert out["nodes"][2]["predecessor"] is None


def test_graph_error_exit_codes(tmp_path, capsys):
    mixed = graph_doc(
        (0, 1, {"base": "gaussian", "tuple": [1, 0, -1, 2]}),
        (1, 2, {"base": "exponential", "tuple": [1, 0, -1, 2]}),
    )
    assert main(["graph", "--edges", write_doc(tmp_path, "m.json", mixed),
                 "--source", "0"]) == 3

    crisp_neg = {"base": "identity", "tuple": [0, -1, 0, -1]}
    loop = graph_doc((0, 1, crisp_neg), (1, 0, crisp_neg), nodes=2)
    assert main(["graph", "--edges", write_doc(tmp_path, "l.json", loop),
                 "--source", "0"]) == 4

    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2", encoding="utf-8")
    assert main(["graph", "--edges", str(bad), "--source", "0"]) == 2

    ok = write_doc(tmp_path, "ok.json",
                   graph_doc((0, 1, {"base": "identity",
                                     "tuple": [1, 0, -1, 2]})))
    assert main(["graph", "--edges", ok, "--source", "9"]) == 2
    assert main(["graph", "--edges", str(tmp_path / "nope.json"),
                 "--source", "0"]) == 5
    capsys.readouterr()


# ---------------------------------------------------------------------------
# demo and process-level entry
# ---------------------------------------------------------------------------

def test_demo_reports_all_checks_passing(capsys):
    assert main(["demo"]) == 0
    out = capsys.readouterr().out
    assert out.count(" PASS") == 8
    assert "FAIL" not in out
    assert "8/8 checks passed" in out


def test_module_entrypoint_runs_in_a_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ofnring", "eval", "--expr",
         "crisp(1) + crisp(2)"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout.splitlines()[0])
    assert doc == {"base": "identity", "tuple": [0.0, 3.0, 0.0, 3.0]}


def test_missing_subcommand_is_an_argparse_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
