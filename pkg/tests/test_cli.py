"""Command-line surface: dispatch, exit codes, round-trips, determinism."""

from __future__ import annotations

import json

import pytest

from leavitt import graph_from_obj, graph_to_json, graph_to_obj
from leavitt.cli import main
from leavitt.fixtures import (
    g_clock_omega,
    g_line,
    g_loop,
    g_loop_chain_with_sink,
    g_rose2,
    g_toeplitz,
)


@pytest.fixture
def write_graph(tmp_path):
    def _write(g, name="g.json"):
        path = tmp_path / name
        path.write_text(graph_to_json(g), encoding="utf-8")
        return str(path)

    return _write


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    out = json.loads(captured.out) if captured.out.strip() else None
    err = json.loads(captured.err) if captured.err.strip() else None
    return code, out, err


def test_validate_ok(write_graph, capsys):
    code, out, _ = run_cli(capsys, "validate", write_graph(g_toeplitz()))
    assert code == 0
    assert out == {"ok": True, "vertices": 2, "edgeBundles": 2}


def test_validate_schema_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices":["a"],"edges":[{"id":"e","src":"a","dst":"zz"}]}')
    code, out, err = run_cli(capsys, "validate", str(bad))
    assert code == 2 and out is None
    assert "undeclared endpoint" in err["error"]


def test_fp_verdict_polarity_keeps_exit_zero(write_graph, capsys):
    code, out, _ = run_cli(capsys, "fp", write_graph(g_rose2()))
    assert code == 0
    assert out["allFinitelyPresented"] is False
    assert out["reasons"][0]["code"] == "GEQ_NOT_ANTISYMMETRIC"


def test_gk_and_socle(write_graph, capsys):
    code, out, _ = run_cli(capsys, "gk", write_graph(g_loop_chain_with_sink(3)))
    assert code == 0 and out["finite"] is True
    code, out, _ = run_cli(capsys, "socle", write_graph(g_toeplitz()))
    assert out == {"linePoints": ["v2"], "socleVertices": ["v2"]}


def test_eval_and_growth(write_graph, capsys):
    path = write_graph(g_loop())
    code, out, _ = run_cli(capsys, "eval", path, "--expr", "c*.c")
    assert code == 0
    assert out["terms"] == [{"coeff": "1", "p": [], "q": [], "v": "v"}]
    code, out, _ = run_cli(capsys, "growth", path, "--n", "10")
    assert out == [2 * n + 1 for n in range(11)]


def test_eval_gf_field(write_graph, capsys):
    code, out, _ = run_cli(capsys, "eval", write_graph(g_loop()), "--expr", "5 v", "--field", "5")
    assert code == 0 and out["terms"] == []


def test_eval_unknown_identifier_exits_2(write_graph, capsys):
    code, _, err = run_cli(capsys, "eval", write_graph(g_loop()), "--expr", "zz")
    assert code == 2 and "unknown identifier" in err["error"]


def test_closure_quotient_hedgehog_ef_round_trip(write_graph, capsys):
    path = write_graph(g_loop_chain_with_sink(2))
    code, out, _ = run_cli(capsys, "closure", path, "--seed", "w")
    assert out["vertices"] == ["w"]
    code, out, _ = run_cli(capsys, "quotient", path, "--h", "w")
    assert code == 0
    assert graph_from_obj(out) is not None
    code, out2, _ = run_cli(capsys, "hedgehog", path, "--h", "w", "--depth", "3")
    assert code == 0 and out2["complete"] is False
    assert graph_from_obj(out2["graph"]) is not None
    code, out3, _ = run_cli(capsys, "ef", path, "--edges", "c1")
    assert graph_from_obj(out3) is not None


def test_hs_sets_and_cap_exit_3(write_graph, capsys, tmp_path):
    code, out, _ = run_cli(capsys, "hs-sets", write_graph(g_loop_chain_with_sink(2)))
    assert code == 0 and out["count"] == 4
    big = graph_from_obj({"vertices": [f"v{i}" for i in range(22)], "edges": []})
    code, _, err = run_cli(capsys, "hs-sets", write_graph(big, "big.json"))
    assert code == 3
    assert "cap" in err["error"]


def test_corner_and_filtration(write_graph, capsys):
    code, out, _ = run_cli(capsys, "corner", write_graph(g_loop()), "--vertex", "v")
    assert out["flags"]["noExitCycleTree"] is True
    code, out, _ = run_cli(capsys, "filtration", write_graph(g_loop_chain_with_sink(2)), "--kind", "fp")
    assert out["chain"] == [["w"], ["v1", "w"], ["v1", "v2", "w"]]
    code, out, _ = run_cli(capsys, "filtration", write_graph(g_toeplitz()), "--kind", "gk")
    assert out["chain"] == [["v2"], ["v1", "v2"]]
    code, _, err = run_cli(capsys, "filtration", write_graph(g_rose2()), "--kind", "fp")
    assert code == 2


def test_act_chen(write_graph, capsys):
    stream = json.dumps({"kind": "periodic", "prefix": [], "period": ["c"]})
    code, out, _ = run_cli(
        capsys, "act", write_graph(g_loop()), "--module", "chen", "--stream", stream, "--expr", "c*"
    )
    assert code == 0
    assert out == {"module": "chen", "terms": [{"coeff": "1", "prefix": [], "tailIndex": 0}]}


def test_act_sv(write_graph, capsys):
    code, out, _ = run_cli(
        capsys, "act", write_graph(g_clock_omega()), "--module", "sv", "--vertex", "u",
        "--expr", "b[2].b[2]*",
    )
    assert code == 0
    assert out == {"module": "sv", "terms": []}
    code, _, err = run_cli(
        capsys, "act", write_graph(g_clock_omega()), "--module", "sv", "--expr", "u"
    )
    assert code == 2


def test_report_stable_under_reordering(tmp_path, capsys):
    obj = graph_to_obj(g_loop_chain_with_sink(2))
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(obj))
    reordered = {
        "edges": list(reversed(obj["edges"])),
        "vertices": list(reversed(obj["vertices"])),
    }
    b.write_text(json.dumps(reordered))
    code_a = main(["report", str(a)])
    out_a = capsys.readouterr().out
    code_b = main(["report", str(b)])
    out_b = capsys.readouterr().out
    assert code_a == code_b == 0
    assert out_a == out_b


def test_stdin_input(write_graph, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(graph_to_json(g_loop())))
    code, out, _ = run_cli(capsys, "validate", "-")
    assert code == 0 and out["ok"] is True
