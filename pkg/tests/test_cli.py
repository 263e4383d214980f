import json

import pytest

from iassl import __version__
from iassl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p3_file(tmp_path, p3):
    path = tmp_path / "p3.json"
    path.write_text(p3.to_json())
    return path


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--ground-set", "0,1,2")
    assert code == 0
    assert json.loads(out)["b_family"] == [[0], [0, 2]]


def test_classify_duplicate_is_input_error(capsys):
    code, _, err = run(capsys, "classify", "--ground-set", "0,1,1")
    assert code == 2 and "iassl:" in err


def test_capacity_exit(capsys, monkeypatch):
    monkeypatch.setenv("IASSL_MAX_CLASSIFY_SIZE", "2")
    code, _, err = run(capsys, "classify", "--ground-set", "0,1,2")
    assert code == 3 and "capacity" in err


def test_verify(capsys, p3_file):
    code, out, _ = run(capsys, "verify", "--graph", str(p3_file), "--predicate", "iassl")
    assert code == 0 and json.loads(out)["kappa"] == 2
    code, out, _ = run(capsys, "verify", "--graph", str(p3_file), "--predicate", "iassi")
    assert code == 1 and json.loads(out)["holds"] is False
    code, _, _ = run(capsys, "verify", "--graph", str(p3_file), "--predicate", "iasgl")
    assert code == 0
    code, _, _ = run(capsys, "verify", "--graph", str(p3_file), "--ground-set", "1,2")
    assert code == 2


def test_verify_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "verify", "--graph", str(bad))[0] == 2
    assert run(capsys, "verify", "--graph", str(tmp_path / "missing.json"))[0] == 2


def test_construct_writes_trace(capsys, tmp_path):
    out = tmp_path / "g.json"
    dot = tmp_path / "g.dot"
    code, _, _ = run(capsys, "construct", "--ground-set", "0,1,2", "--mode", "iassl",
                     "--out", str(out), "--dot", str(dot))
    assert code == 0
    g = json.loads(out.read_text())
    assert len(g["vertices"]) == 6 and len(g["edges"]) == 6
    trace = json.loads((tmp_path / "g.trace.json").read_text())
    assert trace["mode"] == "iassl"
    assert dot.read_text().startswith("graph")
    code, _, _ = run(capsys, "verify", "--graph", str(out))
    assert code == 0


def test_construct_iassi_stdout(capsys):
    code, out, _ = run(capsys, "construct", "--ground-set", "0,1", "--mode", "iassi")
    assert code == 0 and json.loads(out)["graph"]["edges"] == []


def test_search(capsys, tmp_path):
    g = tmp_path / "p3.json"
    g.write_text(json.dumps({"vertices": [{"id": i} for i in range(3)], "edges": [[0, 1], [1, 2]]}))
    code, out, _ = run(capsys, "search", "--graph", str(g), "--ground-set", "0,1", "--all")
    assert code == 0 and len(json.loads(out)["solutions"]) == 2
    code, out, _ = run(capsys, "search", "--graph", str(g))
    assert code == 0 and json.loads(out)["min_ground_set"] == [0, 1]
    c3 = tmp_path / "c3.json"
    c3.write_text(json.dumps({"vertices": [{"id": i} for i in range(3)], "edges": [[0, 1], [1, 2], [0, 2]]}))
    code, out, _ = run(capsys, "search", "--graph", str(c3), "--ground-set", "0,1,2")
    assert code == 1 and json.loads(out)["exhausted"] is True


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "cycles", "--n", "3..4", "--xmax", "3", "--xsize", "2")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 2 * 4
    assert not any(r["admits"] for r in rows)
    assert run(capsys, "sweep", "--family", "cycles", "--n", "x")[0] == 2


def test_audit(capsys, tmp_path):
    out = tmp_path / "audit.json"
    code, _, _ = run(capsys, "audit", "--xsize", "2", "--xmax", "2", "--nmax", "3", "--out", str(out))
    data = json.loads(out.read_text())
    assert code == 0 and data["summary"]["kappa-identity"] == "CONFIRMED"


def test_export_dot(capsys, p3_file):
    code, out, _ = run(capsys, "export-dot", "--graph", str(p3_file), "--name", "P3")
    assert code == 0 and out.startswith("graph P3")


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out
