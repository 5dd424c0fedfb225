import json

import pytest

from rdisconnect.cli import main
from rdisconnect.errors import FormatError
from rdisconnect.graph import complete_graph
from rdisconnect.io import coloring_from_json, graph_from_json, graph_to_json, to_dot
from rdisconnect.coloring import EdgeColoring


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


def test_construct_even_extremal(tmp_path, capsys):
    prefix = tmp_path / "w"
    code, out, _ = run(capsys, "construct", "--even-extremal", "6", "3", "--out", str(prefix))
    assert code == 0
    graph = json.loads((tmp_path / "w.graph.json").read_text())
    assert len(graph["edges"]) == 10
    coloring = json.loads((tmp_path / "w.coloring.json").read_text())
    assert coloring["k"] == 3 and len(coloring["colors"]) == 10
    assert json.loads(out)["hub"] == 5


def test_verify_star_hub(tmp_path, capsys):
    prefix = tmp_path / "w"
    run(capsys, "construct", "--even-extremal", "6", "3", "--out", str(prefix))
    code, out, _ = run(capsys, "verify", f"{prefix}.graph.json", f"{prefix}.coloring.json", "--star-hub", "5")
    assert code == 0 and json.loads(out)["ok"] is True
    code, _, _ = run(capsys, "verify", f"{prefix}.graph.json", f"{prefix}.coloring.json")
    assert code == 0


def test_verify_failure_exits_one(tmp_path, capsys):
    g = write(tmp_path / "k3.json", graph_to_json(complete_graph(3)))
    c = write(tmp_path / "c.json", {"k": 1, "colors": [1, 1, 1]})
    assert run(capsys, "verify", g, c)[0] == 1
    assert run(capsys, "verify", g, c, "--star-hub", "0")[0] == 1


def test_rd_k4(tmp_path, capsys):
    g = write(tmp_path / "k4.graph.json", graph_to_json(complete_graph(4)))
    code, out, _ = run(capsys, "rd", g)
    assert code == 0
    assert json.loads(out)["rd"] == 3


def test_rd_budget(tmp_path, capsys):
    c5 = {"n": 5, "edges": [[0, 1], [0, 4], [1, 2], [2, 3], [3, 4]]}
    code, out, _ = run(capsys, "rd", write(tmp_path / "c5.json", c5), "--budget", "3")
    report = json.loads(out)
    assert code == 0 and report["rd"] is None and report["lambda_plus"] == 2


def test_bounds(tmp_path, capsys):
    g = write(tmp_path / "k4.json", graph_to_json(complete_graph(4)))
    code, out, _ = run(capsys, "bounds", g)
    b = json.loads(out)
    assert code == 0
    assert (b["lambda"], b["lambda_plus"], b["mader_bound"], b["max_degree"]) == (3, 3, 3, 3)
    assert "rd" not in b


def test_factorize(capsys):
    code, out, _ = run(capsys, "factorize", "6")
    f = json.loads(out)
    assert code == 0 and len(f["factors"]) == 5
    assert run(capsys, "factorize", "5")[0] == 2


def test_construct_peel_and_min_size(tmp_path, capsys):
    assert run(capsys, "construct", "--peel", "8", "6", "--out", str(tmp_path / "p"), "--dot", str(tmp_path / "p.dot"))[0] == 0
    peel = json.loads((tmp_path / "p.peel.json").read_text())
    assert len(peel["addable_matching"]) == 3 and len(peel["factors"]) == 6
    assert "--" in (tmp_path / "p.dot").read_text()
    assert run(capsys, "construct", "--min-size", "5", "2", "--out", str(tmp_path / "m"))[0] == 0
    code, out, _ = run(capsys, "rd", str(tmp_path / "m.graph.json"))
    assert json.loads(out)["rd"] == 2


def test_round_trip_every_written_file(tmp_path, capsys):
    run(capsys, "construct", "--even-extremal", "8", "4", "--out", str(tmp_path / "x"))
    run(capsys, "construct", "--peel", "8", "3", "--out", str(tmp_path / "y"))
    run(capsys, "construct", "--min-size", "6", "3", "--out", str(tmp_path / "z"))
    for name in ("x", "y", "z"):
        gpath = str(tmp_path / f"{name}.graph.json")
        assert run(capsys, "bounds", gpath)[0] == 0
        assert run(capsys, "rd", gpath)[0] == 0
    assert run(capsys, "verify", str(tmp_path / "x.graph.json"), str(tmp_path / "x.coloring.json"))[0] == 0


def test_deterministic_output(tmp_path, capsys):
    outputs = []
    for d in ("a", "b"):
        (tmp_path / d).mkdir()
        run(capsys, "construct", "--even-extremal", "10", "4", "--out", str(tmp_path / d / "w"))
        outputs.append([(tmp_path / d / f).read_bytes() for f in ("w.graph.json", "w.coloring.json")])
    assert outputs[0] == outputs[1]
    g = str(tmp_path / "a" / "w.graph.json")
    assert run(capsys, "rd", g)[1] == run(capsys, "rd", g)[1]


def test_timestamps_opt_in(tmp_path, capsys):
    g = write(tmp_path / "k4.json", graph_to_json(complete_graph(4)))
    assert "generated_at" not in json.loads(run(capsys, "rd", g)[1])
    assert "generated_at" in json.loads(run(capsys, "--timestamps", "rd", g)[1])


def test_census_cli(tmp_path, capsys):
    out = tmp_path / "c.csv"
    code, _, err = run(capsys, "census", "--max-n", "5", "--no-cache", "--out", str(out))
    assert code == 0
    rows = out.read_text().splitlines()
    assert rows[0].startswith("n,k,") and len(rows) == 1 + 1 + 2 + 3 + 4
    assert all(r.endswith("PASS") for r in rows[1:])
    code, _, _ = run(capsys, "census", "--max-n", "4", "--format", "json", "--cache-dir", str(tmp_path / "cache"),
                     "--out", str(tmp_path / "c.json"))
    data = json.loads((tmp_path / "c.json").read_text())
    assert code == 0 and [t["n"] for t in data["tables"]] == [2, 3, 4]
    assert any((tmp_path / "cache").iterdir())


def test_bad_json_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 4,\n "edges": [[0, 1],')
    code, _, err = run(capsys, "rd", str(bad))
    assert code == 2 and "line" in err


def test_bad_field_exits_two(tmp_path, capsys):
    g = write(tmp_path / "g.json", {"n": 3, "edges": [[0, 1], [1, 1]]})
    code, _, err = run(capsys, "bounds", g)
    assert code == 2 and "loop" in err
    g = write(tmp_path / "g2.json", {"edges": []})
    code, _, err = run(capsys, "rd", g)
    assert code == 2 and "'n'" in err


def test_missing_file_exits_two(tmp_path, capsys):
    assert run(capsys, "rd", str(tmp_path / "nope.json"))[0] == 2


def test_coloring_length_mismatch_exits_two(tmp_path, capsys):
    g = write(tmp_path / "g.json", graph_to_json(complete_graph(3)))
    c = write(tmp_path / "c.json", {"k": 1, "colors": [1]})
    code, _, err = run(capsys, "verify", g, c)
    assert code == 2 and "colors" in err


def test_usage_error_names_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["census", "--format", "xml", "--max-n", "3"])
    assert exc.value.code == 2
    assert "--format" in capsys.readouterr().err


def test_io_rejects_unsorted_edges():
    with pytest.raises(FormatError):
        graph_from_json({"n": 3, "edges": [[1, 2], [0, 1]]})
    with pytest.raises(FormatError):
        coloring_from_json({"k": 2, "colors": [1, 3]})


def test_dot_colors_edges():
    dot = to_dot(complete_graph(3), EdgeColoring(2, (1, 2, 1)))
    assert dot.startswith("graph G {")
    assert '0 -- 1 [label="1"' in dot and '0 -- 2 [label="2"' in dot
