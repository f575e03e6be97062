"""Command-line interface behaviour and output stability."""

import json

from richelot.cli import run


def test_census_ok(capsys):
    assert run(["census", "-p", "11"]) == 0
    out = capsys.readouterr().out
    assert "total" in out and "5" in out


def test_census_json(capsys):
    assert run(["census", "-p", "7", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] and doc["p"] == 7


def test_census_rejects_bad_prime(capsys):
    assert run(["census", "-p", "4"]) == 2
    assert "error" in capsys.readouterr().err


def test_graph_json_and_file(tmp_path, capsys):
    assert run(["graph", "-p", "11", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["vertices"]) == 5
    out = tmp_path / "g.dot"
    assert run(["graph", "-p", "7", "--format", "dot",
                "-o", str(out)]) == 0
    assert out.read_text().startswith("digraph")


def test_validate_exit_code(capsys):
    assert run(["validate", "-p", "13"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_atlas_case(capsys):
    assert run(["verify-atlas", "-p", "19", "--case", "II"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_neighbourhood_sextic(capsys):
    # x^5 - 1 over GF(19^2): three orbits of five
    assert run(["neighbourhood", "-p", "19",
                "--sextic=-1,0,0,0,0,1"]) == 0
    out = capsys.readouterr().out
    assert "out-weight 15" in out
    assert out.count("weight  5") == 3


def test_neighbourhood_product(capsys):
    assert run(["neighbourhood", "-p", "11", "--product", "0,1",
                "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["vertex_type"] == "Pi0-1728"
    assert doc["out_weight"] == 15


def test_neighbourhood_atlas_case(capsys):
    assert run(["neighbourhood", "-p", "23", "--atlas", "V"]) == 0
    assert "vertex type V" in capsys.readouterr().out


def test_max_prime_cap(capsys):
    assert run(["census", "-p", "307"]) == 2
    assert "cap" in capsys.readouterr().err


def test_byte_identical_runs(capsys):
    assert run(["graph", "-p", "11", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert run(["graph", "-p", "11", "--format", "json"]) == 0
    assert capsys.readouterr().out == first
    # --threads may take any value without changing output
    assert run(["graph", "-p", "11", "--format", "json",
                "--threads", "4"]) == 0
    assert capsys.readouterr().out == first
