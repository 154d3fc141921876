import io
import json

from multiarr.cli import EXIT_COMPUTATION, EXIT_OK, EXIT_SCHEMA, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_sigma(capsys):
    code, out = run(capsys, "sigma", "--mr", "2", "--u", "3")
    assert code == EXIT_OK
    assert json.loads(out) == {"value": -4, "closed_form": -4, "two_block_form": -3}


def test_output_is_byte_deterministic(capsys):
    _, first = run(capsys, "d1", "--mult", "3,2,2,1")
    _, second = run(capsys, "d1", "--mult", "3,2,2,1")
    assert first == second
    data = json.loads(first)
    assert data["d1"]["pretty"] == "-2*z3 + z4"


def test_exponents_from_flags(capsys):
    code, out = run(capsys, "exponents", "--mult", "5,1,1,1", "--points", "inf,0,1,2")
    assert code == EXIT_OK
    data = json.loads(out)
    assert (data["e1"], data["e2"]) == (3, 5)


def test_divisor_file(tmp_path, capsys):
    payload = {"points": ["0", "inf", "1", "-1"], "mult": [3, 3, 1, 1]}
    path = tmp_path / "divisor.json"
    path.write_text(json.dumps(payload))
    code, out = run(capsys, "degenerate", "--divisor", str(path))
    assert code == EXIT_OK
    assert json.loads(out)["degenerate"] is True


def test_terao_file(tmp_path, capsys):
    payload = {"lines": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]}
    path = tmp_path / "arrangement.json"
    path.write_text(json.dumps(payload))
    code, out = run(capsys, "terao", "--arrangement", str(path))
    assert code == EXIT_OK
    assert json.loads(out)["guaranteed"] is True


def test_json_in(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"mult": [3, 3, 1, 1]}'))
    code, out = run(capsys, "det", "--json-in")
    assert code == EXIT_OK
    assert json.loads(out)["size"] == 2


def test_computation_error_exits_1(capsys):
    code, out = run(capsys, "det", "--mult", "3,3,1")
    assert code == EXIT_COMPUTATION
    data = json.loads(out)
    assert data["error"] == "invalid_input"


def test_schema_violation_exits_2(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"mult": "junk"}'))
    code, out = run(capsys, "det", "--json-in")
    assert code == EXIT_SCHEMA
    assert json.loads(out)["error"] == "schema_violation"


def test_missing_flags_exit_2(capsys):
    code, out = run(capsys, "det")
    assert code == EXIT_SCHEMA
    assert json.loads(out)["error"] == "schema_violation"


def test_scan(capsys):
    code, out = run(capsys, "scan", "--mult", "3,2,2,1", "--lo", "-2", "--hi", "2")
    assert code == EXIT_OK
    data = json.loads(out)
    assert ["1", "2"] in data["degenerate"]


def test_schur_check(capsys):
    code, out = run(capsys, "schur-check", "--mult", "3,3,1,1")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["match"] is True and data["lambda"] == [1, 1]


def test_leading_check(capsys):
    code, out = run(capsys, "leading-check", "--mult", "2,2,2,2,2")
    assert code == EXIT_OK
    assert json.loads(out)["attaining_partitions"] == 3


def test_schema_dump_covers_every_endpoint(capsys):
    code, out = run(capsys, "schema")
    assert code == EXIT_OK
    data = json.loads(out)
    assert set(data["endpoints"]) == {
        "exponents",
        "classify",
        "det",
        "d1",
        "degenerate",
        "scan",
        "sigma",
        "leading-check",
        "schur-check",
        "terao",
    }
    for entry in data["endpoints"].values():
        assert "request" in entry and "response" in entry


def test_shipped_schema_file_is_current(capsys):
    from pathlib import Path

    import multiarr

    code, out = run(capsys, "schema")
    assert code == EXIT_OK
    repo_root = Path(multiarr.__file__).resolve().parents[2]
    shipped = repo_root / "schemas.json"
    assert shipped.exists(), "schemas.json must ship with the repo (run: multiarr schema > schemas.json)"
    assert json.loads(shipped.read_text()) == json.loads(out)
