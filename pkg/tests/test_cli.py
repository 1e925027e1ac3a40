import json

import pytest

from longberge.berge import BergeWitness, verify_witness
from longberge.cli import parse_range, run
from longberge.extremal import ExtremalParams, build_construction42
from longberge.hypercore import Hypergraph, parse_hypergraph, serialize_hypergraph


@pytest.fixture
def c42_file(tmp_path):
    p = tmp_path / "c42.txt"
    p.write_text(serialize_hypergraph(build_construction42(ExtremalParams(17, 7, 3))))
    return str(p)


@pytest.fixture
def k7_file(tmp_path):
    p = tmp_path / "k7.txt"
    p.write_text(serialize_hypergraph(Hypergraph.complete(7, 3)))
    return str(p)


def test_table_row(capsys):
    assert run(["table", "--r", "3", "--k", "7", "--n", "7..30"]) == 0
    lines = capsys.readouterr().out.splitlines()
    cols = lines[0].split("\t")
    row = dict(zip(cols, lines[1 + 17 - 7].split("\t")))
    assert row["n"] == "17" and row["f_r"] == "61"
    assert cols[:8] == ["n", "k", "r", "p", "m", "f", "f_r", "f_r_plus"]


def test_table_trivial_column(capsys):
    run(["table", "--r", "3", "--k", "7", "--n", "5..7"])
    rows = [ln.split("\t") for ln in capsys.readouterr().out.splitlines()[1:]]
    assert rows[0][8] == "10" and rows[2][8] == ""


def test_verify_c42(c42_file, capsys):
    assert run(["verify", "--k", "7", c42_file]) == 0
    out = capsys.readouterr().out
    assert "verdict\tConstruction42" in out and "f_r_minus_edges\t0" in out


def test_verify_k7_certificate(k7_file, capsys):
    assert run(["verify", "--k", "7", k7_file]) == 1
    out = capsys.readouterr().out
    cert = out.split("CERTIFICATE\n", 1)[1]
    w = BergeWitness.parse(cert)
    assert w.length >= 7 and verify_witness(Hypergraph.complete(7, 3), w).ok


def test_verify_json(c42_file, capsys):
    assert run(["verify", "--k", "7", "--format", "json", c42_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "Construction42" and doc["longest"] == 6


def test_construct_roundtrip(tmp_path):
    out = tmp_path / "h.txt"
    assert run(["construct", "--kind", "C41", "--n", "12", "--k", "9", "--r", "3", "-o", str(out)]) == 0
    assert len(parse_hypergraph(out.read_text())) == 66


def test_usage_errors(capsys):
    assert run(["nope"]) == 2
    assert run(["table", "--r", "3"]) == 2
    assert run(["hunt", "--n", "9", "--k", "7", "--r", "3", "--trials", "0"]) == 2
    assert run(["verify", "--k", "7", "/nonexistent/file"]) == 2
    assert run(["table", "--r", "3", "--k", "5", "--n", "9"]) == 2
    assert "usage error" in capsys.readouterr().err


def test_parse_range():
    assert list(parse_range("7..9")) == [7, 8, 9]
    assert list(parse_range("4")) == [4]


def test_hunt_golden(capsys):
    args = ["hunt", "--n", "9", "--k", "7", "--r", "3", "--trials", "20", "--seed", "3", "--format", "json"]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args + ["--threads", "2"]) == 0
    assert capsys.readouterr().out == first


def test_scan_cli(capsys):
    assert run(["scan", "--claim", "near-clique", "--r-range", "3..4", "--k-max", "12"]) == 0
    assert "violations=0" in capsys.readouterr().out


def test_search_budget_exit(capsys):
    assert run(["search", "--n", "8", "--k", "7", "--r", "3", "--budget-nodes", "10"]) == 3
    assert run(["search", "--n", "6", "--k", "5"]) == 0
    assert "value\t9" in capsys.readouterr().out


def test_structure_commands(tmp_path, capsys):
    p = tmp_path / "g.txt"
    p.write_text("5 2\n0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n")
    assert run(["blocks", str(p)]) == 0
    assert "cut_vertices\t0" in capsys.readouterr().out
    assert run(["core", "--alpha", "2", str(p)]) == 0
    assert "surviving\t\n" in capsys.readouterr().out
    assert run(["kopylov", "--k", "5", str(p)]) == 2


def test_sdrp_command(tmp_path, capsys):
    p = tmp_path / "k5.txt"
    p.write_text(serialize_hypergraph(Hypergraph.complete(5, 3)))
    assert run(["sdrp", str(p)]) == 0
    assert capsys.readouterr().out.startswith("# size 10")
