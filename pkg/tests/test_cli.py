import io
import json

import pytest

import _golden as G
from atomata import Dfa, StateSet
from atomata.cli import main, parse_dfa, serialize_dfa
from atomata.errors import DfaParseError
from atomata.search import example1
from conftest import make_dfa


# --- document format ----------------------------------------------------------


def test_fixture_parses_to_example1(ex1):
    assert parse_dfa(G.FIXTURE_TEXT) == ex1


def test_serialize_parse_identity(ex1):
    assert serialize_dfa(ex1) == G.FIXTURE_TEXT
    assert parse_dfa(serialize_dfa(ex1)) == ex1


def test_serialize_idempotent_after_parse():
    messy = "# comment\nstates: 2\n\nalphabet: x y\ninitial: 1\nfinal:\ny: 0 0\nx: 1 0  # trailing\n"
    d = parse_dfa(messy)
    canon = serialize_dfa(d)
    assert serialize_dfa(parse_dfa(canon)) == canon
    assert d.finals == StateSet(2, [])
    assert d.delta("x").map == (1, 0)


def test_parse_errors():
    with pytest.raises(DfaParseError, match="state out of range"):
        parse_dfa("states: 3\nalphabet: a\ninitial: 0\nfinal: 1\na: 0 1 3\n")
    with pytest.raises(DfaParseError, match="unknown letter"):
        parse_dfa("states: 1\nalphabet: a\ninitial: 0\nfinal:\nb: 0\n")
    with pytest.raises(DfaParseError, match="missing transition row"):
        parse_dfa("states: 1\nalphabet: a b\ninitial: 0\nfinal:\na: 0\n")
    with pytest.raises(DfaParseError, match="duplicate"):
        parse_dfa("states: 1\nalphabet: a\ninitial: 0\nfinal:\na: 0\na: 0\n")
    with pytest.raises(DfaParseError, match="duplicate section"):
        parse_dfa("states: 1\nalphabet: a\ninitial: 0\nfinal:\na: 0\nfinal: 0\n")
    with pytest.raises(DfaParseError, match="expected section"):
        parse_dfa("alphabet: a\nstates: 1\ninitial: 0\nfinal:\na: 0\n")
    with pytest.raises(DfaParseError, match="initial state out of range"):
        parse_dfa("states: 1\nalphabet: a\ninitial: 4\nfinal:\na: 0\n")
    err = None
    try:
        parse_dfa("states: 3\nalphabet: a\ninitial: 0\nfinal: 1\na: 0 1 3\n")
    except DfaParseError as exc:
        err = exc
    assert err.line == 5 and err.column is not None


def test_parse_error_reports_position():
    with pytest.raises(DfaParseError, match=r"line 5, column 8"):
        parse_dfa("states: 3\nalphabet: a\ninitial: 0\nfinal: 1\na: 0 1 3\n")


# --- subcommands ---------------------------------------------------------------


def _run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_witness_then_analyze_stdin(capsys, monkeypatch):
    code, doc, _ = _run(capsys, ["witness", "example1"])
    assert code == 0
    assert doc == G.FIXTURE_TEXT
    code, out, _ = _run(capsys, ["analyze", "-"], stdin=doc, monkeypatch=monkeypatch)
    assert code == 0
    assert "syntactic complexity: 27" in out
    assert "atoms: 8" in out


def test_analyze_json(capsys, monkeypatch, tmp_path):
    path = tmp_path / "ex1.dfa"
    path.write_text(G.FIXTURE_TEXT)
    code, out, _ = _run(capsys, ["analyze", str(path), "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["syntactic_complexity"] == 27
    assert data["atom_count"] == 8
    assert data["is_full"] is True
    assert data["prop2"]["equal"] is True
    assert len(data["atoms"]) == 8
    by_label = {a["atom"]: a for a in data["atoms"]}
    assert by_label["012"]["complexity"] == 7
    assert by_label["01"]["bound"] == 10


def test_analyze_single_state_empty_language(capsys, monkeypatch):
    doc = serialize_dfa(make_dfa(1, [(0,)], finals=[]))
    code, out, _ = _run(
        capsys, ["analyze", "-", "--format", "json"], stdin=doc, monkeypatch=monkeypatch
    )
    data = json.loads(out)
    assert data["atom_count"] == 1
    assert data["syntactic_complexity"] == 1


def test_semigroup_witnesses(capsys, tmp_path):
    path = tmp_path / "ex1.dfa"
    path.write_text(G.FIXTURE_TEXT)
    code, out, _ = _run(
        capsys, ["semigroup", str(path), "--witnesses", "--format", "json"]
    )
    data = json.loads(out)
    assert data["size"] == 27 and data["is_full"] is True
    words = {w["word"]: tuple(w["map"]) for w in data["witnesses"]}
    assert words["d"] == (1, 1, 1)
    assert words["aa"] == (0, 1, 2)


def test_atoms_table_and_single_atom(capsys, tmp_path, monkeypatch):
    path = tmp_path / "ex1.dfa"
    path.write_text(G.FIXTURE_TEXT)
    code, out, _ = _run(capsys, ["atoms", str(path), "--format", "json"])
    data = json.loads(out)
    assert len(data["atoms"]) == 8

    code, out, _ = _run(capsys, ["atoms", str(path), "--atom", "012"])
    assert code == 0
    atom_dfa = parse_dfa(out)
    assert atom_dfa.n == 7

    code, _, err = _run(capsys, ["atoms", str(path), "--atom", "01234"])
    assert code == 1
    assert "error" in err


def test_atomaton_table_matches_golden(capsys, tmp_path):
    path = tmp_path / "ex1.dfa"
    path.write_text(G.FIXTURE_TEXT)
    code, out, _ = _run(capsys, ["atomaton", str(path), "--format", "json"])
    data = json.loads(out)
    assert data["states"] == ["Φ", "0", "1", "2", "01", "02", "12", "012"]
    assert data["initials"] == ["0", "01", "02", "012"]
    assert data["finals"] == ["2"]
    assert data["transitions"]["012"]["d"] == ["1", "01", "12", "012"]
    assert data["transitions"]["Φ"]["c"] == ["Φ", "2"]
    assert data["transitions"]["0"]["d"] == []

    code, out, _ = _run(capsys, ["atomaton", str(path)])
    assert "Φ,0,2,02" in out  # table cell for Φ under d


def test_atoms_negative_atom_by_label(capsys, tmp_path):
    path = tmp_path / "ex1.dfa"
    path.write_text(G.FIXTURE_TEXT)
    for spelled in ("Φ", "phi"):
        code, out, _ = _run(capsys, ["atoms", str(path), "--atom", spelled])
        assert code == 0
        assert parse_dfa(out).n == 7


def test_bounds_table(capsys):
    code, out, _ = _run(capsys, ["bounds", "4"])
    assert code == 0
    assert "r =  2: 43" in out
    code, out, _ = _run(capsys, ["bounds", "4", "--format", "json"])
    data = json.loads(out)
    assert data["rows"][2] == {"r": 2, "bound": 43}
    assert data["max"] == {"r": 2, "value": 43}


def test_intervals_command(capsys, tmp_path):
    path = tmp_path / "ex1.dfa"
    path.write_text(G.FIXTURE_TEXT)
    code, out, _ = _run(
        capsys, ["intervals", str(path), "--atom", "01", "--format", "json"]
    )
    data = json.loads(out)
    assert data["count"] == 10
    assert data["types"] == [[1, 2], [2, 2]]
    assert data["sink"] is True


def test_intervals_requires_full(capsys, tmp_path):
    path = tmp_path / "small.dfa"
    # a lone transposition generates only 2 of the 4 transformations
    path.write_text(serialize_dfa(make_dfa(2, [(1, 0)], finals=[1])))
    code, _, err = _run(capsys, ["intervals", str(path), "--atom", "0"])
    assert code == 1
    assert "semigroup" in err


def test_verify_prop1_cli(capsys):
    code, out, _ = _run(capsys, ["verify", "prop1", "--n", "3"])
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary["ok"] is True and summary["violations"] == 0


def test_verify_theorem3_sampled_cli(capsys):
    code, out, _ = _run(
        capsys,
        ["verify", "theorem3", "--n", "3", "--k", "3", "--samples", "200", "--seed", "1"],
    )
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary["violations"] == 0
    assert summary["params"]["samples"] == 200


def test_search_converse_cli(capsys):
    code, out, _ = _run(
        capsys,
        ["search", "converse", "--n", "3", "--k", "3", "--limit", "1", "--timestamp", "t0"],
    )
    assert code == 0
    lines = out.strip().splitlines()
    record = json.loads(lines[0])
    summary = json.loads(lines[-1])
    assert record["type"] == "campaign-record"
    assert record["syntactic_complexity"] == 24
    assert summary["findings"] == 1
    assert summary["ok"] is True  # findings are success


def test_witness_max_semigroup_cli(capsys):
    code, out, _ = _run(capsys, ["witness", "max-semigroup", "--n", "4"])
    assert code == 0
    d = parse_dfa(out)
    assert d.n == 4 and d.alphabet == ("a", "b", "c")


def test_bad_document_nonzero_exit(capsys, monkeypatch):
    code, _, err = _run(
        capsys, ["analyze", "-"], stdin="states: x\n", monkeypatch=monkeypatch
    )
    assert code == 1
    assert "error" in err


def test_unknown_subcommand_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_env_fallback(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("ATOMATA_MAX_CLOSURE", "8")
    path = tmp_path / "ex1.dfa"
    path.write_text(G.FIXTURE_TEXT)
    code, _, err = _run(capsys, ["semigroup", str(path)])
    assert code == 1
    assert "cap" in err
    # explicit flag wins over the environment
    code, out, _ = _run(capsys, ["semigroup", str(path), "--max-closure", str(10**8)])
    assert code == 0
